#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modind/skewpoly.hpp"

using namespace modind;
using gf::Field;
using gf::FieldElem;
using skewpoly::SkewPoly;

TEST_CASE("skew multiplication") {
    Field f9 = gf::mk_field(3, 2);
    SUBCASE("twist 0 is the ordinary product") {
        SkewPoly a(f9, 0, {FieldElem::from_int(f9, 1), FieldElem::from_int(f9, 2)});
        SkewPoly b(f9, 0, {FieldElem::from_int(f9, 2), FieldElem::from_int(f9, 1)});
        auto c = skew_mul(a, b);
        CHECK(c.coeff(0) == FieldElem::from_int(f9, 2));
        CHECK(c.coeff(1) == FieldElem::from_int(f9, 2));  // 1*1 + 2*2 = 5 = 2
        CHECK(c.coeff(2) == FieldElem::from_int(f9, 2));
    }
    SUBCASE("defining relation t*x = x^3*t over GF(9)") {
        FieldElem x(f9, {0, 1});
        auto prod = skew_mul(SkewPoly::t(f9, 1), SkewPoly::constant(x, 1));
        CHECK(prod.coeff(0).is_zero());
        CHECK(prod.coeff(1) == x.pow(3));
    }
    SUBCASE("(t - xi)^2 at twist 0 in characteristic 3") {
        FieldElem xi(f9, {1, 1});
        SkewPoly lin(f9, 0, {-xi, FieldElem::one(f9)});
        auto sq = skew_mul(lin, lin);
        CHECK(sq.coeff(0) == xi * xi);
        CHECK(sq.coeff(1) == -(xi + xi));
        CHECK(sq.coeff(2) == FieldElem::one(f9));
    }
}

TEST_CASE("euclidean division") {
    Field f9 = gf::mk_field(3, 2);
    std::mt19937_64 rng(41);
    SUBCASE("f = g gives quotient 1") {
        SkewPoly g(f9, 1, {FieldElem::from_index(f9, 5), FieldElem::from_index(f9, 7)});
        auto [q, r] = right_divmod(g, g);
        CHECK(q == SkewPoly::constant(FieldElem::one(f9), 1));
        CHECK(r.is_zero());
    }
    SUBCASE("t^p - 1 is divisible by t - 1 at twist 0") {
        Field f7 = gf::mk_field(7, 1);
        std::vector<FieldElem> c(4, FieldElem::zero(f7));
        c[0] = -FieldElem::one(f7);
        c[3] = FieldElem::one(f7);
        SkewPoly f(f7, 0, c);
        SkewPoly lin(f7, 0, {-FieldElem::one(f7), FieldElem::one(f7)});
        auto [q, r] = right_divmod(f, lin);
        CHECK(r.is_zero());
        // Quotient is t^2 + t + 1.
        CHECK(q.coeff(0) == FieldElem::one(f7));
        CHECK(q.coeff(1) == FieldElem::one(f7));
        CHECK(q.coeff(2) == FieldElem::one(f7));
    }
    SUBCASE("reconstruction on random pairs, both sides") {
        for (std::size_t twist : {std::size_t{0}, std::size_t{1}}) {
            for (int it = 0; it < 250; ++it) {
                std::vector<FieldElem> fc, gc;
                std::size_t df = rng() % 6, dg = rng() % 4;
                for (std::size_t i = 0; i <= df; ++i) fc.push_back(FieldElem::from_index(f9, rng() % 9));
                for (std::size_t i = 0; i <= dg; ++i) gc.push_back(FieldElem::from_index(f9, rng() % 9));
                SkewPoly f(f9, twist, fc), g(f9, twist, gc);
                if (g.is_zero()) continue;
                auto [q, r] = right_divmod(f, g);
                CHECK(skew_mul(q, g) + r == f);
                CHECK(r.degree() < g.degree());
                auto [lq, lr] = left_divmod(f, g);
                CHECK(skew_mul(g, lq) + lr == f);
                CHECK(lr.degree() < g.degree());
            }
        }
    }
}

TEST_CASE("twisted powers") {
    Field f9 = gf::mk_field(3, 2);
    std::mt19937_64 rng(43);
    SUBCASE("twist 0 reduces to ordinary powers") {
        for (int it = 0; it < 20; ++it) {
            FieldElem mu = FieldElem::from_index(f9, 1 + rng() % 8);
            for (std::int64_t i = -4; i <= 4; ++i)
                CHECK(skewpoly::twisted_power_left(mu, i, 0) == mu.pow(i));
        }
    }
    SUBCASE("mu^{<0} = 1; mu^{<2} = mu^4 lands in GF(3) at twist 1 over GF(9)") {
        for (std::uint64_t idx = 1; idx < 9; ++idx) {
            FieldElem mu = FieldElem::from_index(f9, idx);
            CHECK(skewpoly::twisted_power_left(mu, 0, 1) == FieldElem::one(f9));
            FieldElem norm = skewpoly::twisted_power_left(mu, 2, 1);
            CHECK(norm == mu.pow(4));
            CHECK(norm.frobenius(1) == norm);  // fixed by Frobenius: in GF(3)
        }
    }
    SUBCASE("left power law mu^{<i} a^i(mu^{<j}) = mu^{<(i+j)}") {
        for (auto [p, k] : {std::pair<std::uint64_t, std::size_t>{3, 2}, {2, 3}, {2, 6}}) {
            Field f = gf::mk_field(p, k);
            const std::uint64_t q = gf::field_order(f);
            for (int it = 0; it < 30; ++it) {
                FieldElem mu = FieldElem::from_index(f, 1 + rng() % (q - 1));
                for (std::int64_t i = -4; i <= 4; ++i)
                    for (std::int64_t j = -4; j <= 4; ++j) {
                        auto lhs = skewpoly::twisted_power_left(mu, i, 1) *
                                   skewpoly::twisted_power_left(mu, j, 1).frobenius(i);
                        CHECK(lhs == skewpoly::twisted_power_left(mu, i + j, 1));
                    }
            }
        }
    }
    SUBCASE("iterated law mu^{<i} a^i(mu^{<i}) ... = mu^{<(ij)}") {
        Field f = gf::mk_field(3, 2);
        for (int it = 0; it < 20; ++it) {
            FieldElem mu = FieldElem::from_index(f, 1 + rng() % 8);
            for (std::int64_t i = -4; i <= 4; ++i)
                for (std::int64_t j = 0; j <= 4; ++j) {
                    FieldElem prod = FieldElem::one(f);
                    for (std::int64_t l = 0; l < j; ++l)
                        prod = prod * skewpoly::twisted_power_left(mu, i, 1).frobenius(i * l);
                    CHECK(prod == skewpoly::twisted_power_left(mu, i * j, 1));
                }
        }
    }
    SUBCASE("consistency with the monomial model: (mu t)^i = mu^{<i} t^i") {
        FieldElem mu = FieldElem::from_index(f9, 5);
        SkewPoly mt = SkewPoly::monomial(mu, 1, 1);
        SkewPoly pow = SkewPoly::constant(FieldElem::one(f9), 1);
        for (std::int64_t i = 0; i <= 5; ++i) {
            CHECK(pow == SkewPoly::monomial(skewpoly::twisted_power_left(mu, i, 1), static_cast<std::size_t>(i), 1));
            pow = skew_mul(pow, mt);
        }
    }
    SUBCASE("right powers from the monomial model: (t mu)^i = t^i mu^{i>}") {
        FieldElem mu = FieldElem::from_index(f9, 7);
        SkewPoly tm = skew_mul(SkewPoly::t(f9, 1), SkewPoly::constant(mu, 1));
        SkewPoly pow = SkewPoly::constant(FieldElem::one(f9), 1);
        for (std::int64_t i = 0; i <= 5; ++i) {
            SkewPoly expect = skew_mul(SkewPoly::monomial(FieldElem::one(f9), static_cast<std::size_t>(i), 1),
                                       SkewPoly::constant(skewpoly::twisted_power_right(mu, i, 1), 1));
            CHECK(pow == expect);
            pow = skew_mul(pow, tm);
        }
    }
}

TEST_CASE("t^p - lambda is two-sided when lambda is fixed by the twist") {
    Field f9 = gf::mk_field(3, 2);
    // twist 1 has order 2 on GF(9); take p = 2 and lambda in GF(3).
    for (std::int64_t lv : {1, 2}) {
        FieldElem lambda = FieldElem::from_int(f9, lv);
        std::vector<FieldElem> bc = {-lambda, FieldElem::zero(f9), FieldElem::one(f9)};
        SkewPoly binom(f9, 1, bc);
        SkewPoly t = SkewPoly::t(f9, 1);
        CHECK(skew_mul(t, binom) == skew_mul(binom, t));
        for (std::uint64_t idx = 0; idx < 9; ++idx) {
            FieldElem d = FieldElem::from_index(f9, idx);
            // Commutative coefficients: delta * (t^p - lambda) = (t^p - lambda) * delta'
            // with delta' = lambda^{-1} delta lambda = delta.
            CHECK(skew_mul(SkewPoly::constant(d, 1), binom) == skew_mul(binom, SkewPoly::constant(d, 1)));
        }
    }
}

TEST_CASE("norm equation solver") {
    SUBCASE("target 1 gives mu = 1") {
        Field f9 = gf::mk_field(3, 2);
        auto mu = skewpoly::solve_left_twisted_pth_root(FieldElem::one(f9), 2, 1);
        REQUIRE(mu.has_value());
        CHECK(*mu == FieldElem::one(f9));
    }
    SUBCASE("target 2 in GF(3) from GF(9)") {
        Field f9 = gf::mk_field(3, 2);
        auto mu = skewpoly::solve_left_twisted_pth_root(FieldElem::from_int(f9, 2), 2, 1);
        REQUIRE(mu.has_value());
        CHECK(mu->pow(4) == FieldElem::from_int(f9, 2));  // mu^{<2} = mu^(1+3)
    }
    SUBCASE("exhaustive check over GF(9)/GF(3), GF(8)/GF(2), GF(64)/GF(4)") {
        struct Case {
            std::uint64_t p0;
            std::size_t deg;
            std::size_t p;       // order of the twist
            std::size_t twist;   // Frobenius exponent
        };
        for (auto c : {Case{3, 2, 2, 1}, Case{2, 3, 3, 1}, Case{2, 6, 3, 2}}) {
            Field f = gf::mk_field(c.p0, c.deg);
            const std::uint64_t q = gf::field_order(f);
            std::uint64_t fixed_count = 0;
            for (std::uint64_t idx = 1; idx < q; ++idx) {
                FieldElem target = FieldElem::from_index(f, idx);
                if (target.frobenius(static_cast<std::int64_t>(c.twist)) != target) continue;
                ++fixed_count;
                auto sols = skewpoly::enumerate_twisted_pth_roots(target, c.p, c.twist);
                // Norm onto the fixed field is surjective; kernel size is
                // (q-1)/(q0^(deg/p)-1) per solution count.
                std::uint64_t sub = 1;
                for (std::size_t i = 0; i < c.deg / c.p; ++i) sub *= c.p0;
                CHECK(sols.size() == (q - 1) / (sub - 1));
                for (const auto& mu : sols)
                    CHECK(skewpoly::twisted_power_left(mu, static_cast<std::int64_t>(c.p), c.twist) == target);
                // Sorted by discrete log: strictly increasing logs.
                gf::DlogTable table(f);
                for (std::size_t i = 1; i < sols.size(); ++i) CHECK(table.log(sols[i - 1]) < table.log(sols[i]));
            }
            std::uint64_t sub = 1;
            for (std::size_t i = 0; i < c.deg / c.p; ++i) sub *= c.p0;
            CHECK(fixed_count == sub - 1);
        }
    }
    SUBCASE("rejects zero and unfixed targets") {
        Field f9 = gf::mk_field(3, 2);
        CHECK_THROWS_AS(skewpoly::solve_left_twisted_pth_root(FieldElem::zero(f9), 2, 1), input_error);
        FieldElem x(f9, {0, 1});
        CHECK_THROWS_AS(skewpoly::solve_left_twisted_pth_root(x, 2, 1), input_error);
    }
}

TEST_CASE("untwist") {
    Field f9 = gf::mk_field(3, 2);
    std::mt19937_64 rng(47);
    SUBCASE("eps = 1 is the identity") {
        std::vector<FieldElem> c = {FieldElem::from_index(f9, 3), FieldElem::from_index(f9, 5)};
        CHECK(skewpoly::untwist(c, FieldElem::one(f9)) == c);
    }
    SUBCASE("p=2 instance: (a0, a1) -> (a0, a1 g^{-1})") {
        FieldElem g = gf::primitive_element(f9);
        std::vector<FieldElem> c = {FieldElem::from_index(f9, 4), FieldElem::from_index(f9, 7)};
        auto u = skewpoly::untwist(c, g);
        CHECK(u[0] == c[0]);
        CHECK(u[1] == c[1] * g.inv());
    }
    SUBCASE("round trip") {
        for (int it = 0; it < 30; ++it) {
            std::vector<FieldElem> c;
            for (int i = 0; i < 5; ++i) c.push_back(FieldElem::from_index(f9, rng() % 9));
            FieldElem eps = FieldElem::from_index(f9, 1 + rng() % 8);
            CHECK(skewpoly::untwist(skewpoly::untwist(c, eps), eps.inv()) == c);
        }
    }
}
