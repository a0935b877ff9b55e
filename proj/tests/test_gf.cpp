#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modind/gf.hpp"

using namespace modind;
using gf::Field;
using gf::FieldElem;
using gf::Poly;

namespace {

// Independent oracle: enumerate monic polynomials of the given degree over
// GF(p) in lexicographic order (low-degree-first) and return the first one
// with no nontrivial monic divisor (checked by exhaustive trial division).
std::vector<gf::coeff_t> smallest_irreducible_bruteforce(std::uint64_t p, std::size_t deg) {
    Field f = gf::mk_field(p, 1);
    auto make_poly = [&](std::uint64_t idx, std::size_t d, bool monic) {
        std::vector<FieldElem> c;
        for (std::size_t i = 0; i < d; ++i) {
            c.push_back(FieldElem::from_int(f, static_cast<std::int64_t>(idx % p)));
            idx /= p;
        }
        if (monic) c.push_back(FieldElem::one(f));
        return Poly(f, c);
    };
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly cand = make_poly(idx, deg, true);
        bool irred = true;
        for (std::size_t dd = 1; irred && dd <= deg / 2; ++dd) {
            std::uint64_t dcount = 1;
            for (std::size_t i = 0; i < dd; ++i) dcount *= p;
            for (std::uint64_t j = 0; j < dcount; ++j) {
                Poly div = make_poly(j, dd, true);
                if (divmod(cand, div).second.is_zero()) {
                    irred = false;
                    break;
                }
            }
        }
        if (irred) {
            std::vector<gf::coeff_t> out;
            for (const auto& e : cand.coeffs()) out.push_back(e.coeffs()[0]);
            return out;
        }
    }
    return {};
}

}  // namespace

TEST_CASE("mk_field basics") {
    Field f7 = gf::mk_field(7, 1);
    CHECK(f7->modulus == std::vector<gf::coeff_t>{0, 1});  // prime field sentinel s

    Field f9 = gf::mk_field(3, 2);
    // Oracle: enumerate monic quadratics over GF(3), test by trial division.
    CHECK(f9->modulus == smallest_irreducible_bruteforce(3, 2));
    CHECK(f9->modulus == std::vector<gf::coeff_t>{1, 0, 1});  // s^2 + 1

    CHECK_THROWS_AS(gf::mk_field(4, 1), input_error);
    CHECK_THROWS_AS(gf::mk_field(7, 0), input_error);
}

TEST_CASE("mk_field is deterministic and matches the brute-force oracle") {
    for (auto [p, k] : {std::pair<std::uint64_t, std::size_t>{2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
        Field a = gf::mk_field(p, k);
        Field b = gf::mk_field(p, k);
        CHECK(a->modulus == b->modulus);
        CHECK(a->modulus == smallest_irreducible_bruteforce(p, k));
    }
}

TEST_CASE("basic arithmetic") {
    Field f7 = gf::mk_field(7, 1);
    CHECK(FieldElem::from_int(f7, 3) * FieldElem::from_int(f7, 5) == FieldElem::one(f7));
    CHECK_THROWS_AS(FieldElem::zero(f7).inv(), input_error);

    Field f9 = gf::mk_field(3, 2);  // modulus s^2 + 1, so i^2 = -1 = 2
    FieldElem i = FieldElem(f9, {0, 1});
    CHECK(i * i == FieldElem::from_int(f9, 2));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : {std::pair<std::uint64_t, std::size_t>{2, 3}, {3, 6}, {5, 2}, {7, 1}, {3, 1}}) {
        Field f = gf::mk_field(p, k);
        const std::uint64_t q = gf::field_order(f);
        for (int it = 0; it < 50; ++it) {
            FieldElem x = FieldElem::from_index(f, rng() % q);
            FieldElem y = FieldElem::from_index(f, rng() % q);
            FieldElem z = FieldElem::from_index(f, rng() % q);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + (-x) == FieldElem::zero(f));
            if (!x.is_zero()) CHECK(x * x.inv() == FieldElem::one(f));
        }
    }
}

TEST_CASE("frobenius") {
    Field f9 = gf::mk_field(3, 2);
    FieldElem x(f9, {0, 1});  // x^2 = -1
    CHECK(x.frobenius(1) == -x);  // x^3 = x * x^2 = -x
    CHECK(x.frobenius(0) == x);
    CHECK(x.frobenius(2) == x);  // order = degree

    Field f7 = gf::mk_field(7, 1);
    CHECK(FieldElem::from_int(f7, 3).frobenius(1) == FieldElem::from_int(f7, 3));

    // Automorphism property on random pairs.
    std::mt19937_64 rng(11);
    Field f = gf::mk_field(5, 3);
    for (int it = 0; it < 50; ++it) {
        FieldElem a = FieldElem::from_index(f, rng() % 125);
        FieldElem b = FieldElem::from_index(f, rng() % 125);
        CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
        CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
    }
}

TEST_CASE("pth_root") {
    Field f3 = gf::mk_field(3, 1);
    CHECK(FieldElem::from_int(f3, 2).pth_root() == FieldElem::from_int(f3, 2));  // 2^3 = 8 = 2
    Field f9 = gf::mk_field(3, 2);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        FieldElem x = FieldElem::from_index(f9, rng() % 9);
        CHECK(x.pth_root().pow(3) == x);
    }
}

TEST_CASE("factor_poly examples") {
    Field f7 = gf::mk_field(7, 1);
    SUBCASE("s^2 - 1 over GF(7)") {
        auto fs = gf::factor_poly(Poly::from_ints(f7, {-1, 0, 1}));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].first == Poly::from_ints(f7, {1, 1}));   // s + 1
        CHECK(fs[1].first == Poly::from_ints(f7, {-1, 1}));  // s - 1
    }
    SUBCASE("s^3 - 2 over GF(7) is irreducible (2 is not a cube mod 7)") {
        auto fs = gf::factor_poly(Poly::from_ints(f7, {-2, 0, 0, 1}));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first.degree() == 3);
        CHECK(fs[0].second == 1);
        // Oracle: the cubes mod 7 are {0, 1, 6}.
        for (int c = 0; c < 7; ++c) CHECK(FieldElem::from_int(f7, c).pow(3) != FieldElem::from_int(f7, 2));
    }
    SUBCASE("s^3 - 1 over GF(7) splits with roots 1, 2, 4") {
        auto rs = gf::roots(Poly::from_ints(f7, {-1, 0, 0, 1}));
        REQUIRE(rs.size() == 3);
        CHECK(rs[0] == FieldElem::from_int(f7, 1));
        CHECK(rs[1] == FieldElem::from_int(f7, 2));
        CHECK(rs[2] == FieldElem::from_int(f7, 4));
    }
}

TEST_CASE("factor_poly remultiplies to the input") {
    std::mt19937_64 rng(99);
    for (auto [p, k] : {std::pair<std::uint64_t, std::size_t>{2, 1}, {3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        Field f = gf::mk_field(p, k);
        const std::uint64_t q = gf::field_order(f);
        for (int it = 0; it < 85; ++it) {
            std::size_t deg = 1 + rng() % 8;
            std::vector<FieldElem> c;
            for (std::size_t i = 0; i < deg; ++i) c.push_back(FieldElem::from_index(f, rng() % q));
            c.push_back(FieldElem::from_index(f, 1 + rng() % (q - 1)));
            Poly poly(f, c);
            auto fs = gf::factor_poly(poly);
            Poly prod = Poly::constant(poly.leading());
            for (const auto& [g, m] : fs) {
                CHECK(g.is_monic());
                CHECK(gf::is_irreducible_poly(g));
                for (int i = 0; i < m; ++i) prod = prod * g;
            }
            CHECK(prod == poly);
        }
    }
}

TEST_CASE("primitive element and discrete log") {
    for (auto [p, k] : {std::pair<std::uint64_t, std::size_t>{3, 2}, {2, 3}, {7, 1}, {2, 6}}) {
        Field f = gf::mk_field(p, k);
        gf::DlogTable table(f);
        const std::uint64_t q = gf::field_order(f);
        for (std::uint64_t i = 1; i < q; ++i) {
            FieldElem x = FieldElem::from_index(f, i);
            CHECK(table.exp(table.log(x)) == x);
        }
    }
}

TEST_CASE("embedding is a field homomorphism") {
    Field f3 = gf::mk_field(3, 1);
    Field f9 = gf::mk_field(3, 2);
    Field f729 = gf::mk_field(3, 6);
    for (auto [sm, bg] : {std::pair<Field, Field>{f3, f9}, {f3, f729}, {f9, f729}}) {
        gf::Embedding e(sm, bg);
        const std::uint64_t q = gf::field_order(sm);
        for (std::uint64_t i = 0; i < q; ++i)
            for (std::uint64_t j = 0; j < q; ++j) {
                FieldElem a = FieldElem::from_index(sm, i), b = FieldElem::from_index(sm, j);
                CHECK(e(a * b) == e(a) * e(b));
                CHECK(e(a + b) == e(a) + e(b));
            }
        CHECK(e(FieldElem::one(sm)) == FieldElem::one(bg));
    }
}
