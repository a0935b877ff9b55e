#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modind/linalg.hpp"

using namespace modind;
using gf::Field;
using gf::FieldElem;
using linalg::Matrix;
using linalg::Subspace;

namespace {

Matrix mat(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<FieldElem>> r;
    for (const auto& row : rows) {
        std::vector<FieldElem> v;
        for (auto x : row) v.push_back(FieldElem::from_int(f, x));
        r.push_back(std::move(v));
    }
    return Matrix::from_rows(f, r);
}

Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
    Matrix m(f, n, n);
    const std::uint64_t q = gf::field_order(f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = FieldElem::from_index(f, rng() % q);
    return m;
}

}  // namespace

TEST_CASE("rref") {
    Field f7 = gf::mk_field(7, 1);
    SUBCASE("identity") {
        auto r = linalg::rref(Matrix::identity(f7, 3));
        CHECK(r.rank == 3);
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
        CHECK(r.reduced == Matrix::identity(f7, 3));
    }
    SUBCASE("zero") {
        auto r = linalg::rref(Matrix::zero(f7, 2, 2));
        CHECK(r.rank == 0);
        CHECK(r.pivots.empty());
    }
    SUBCASE("proportional rows") {
        auto r = linalg::rref(mat(f7, {{1, 2}, {2, 4}}));
        CHECK(r.rank == 1);
        CHECK(r.pivots == std::vector<std::size_t>{0});
    }
}

TEST_CASE("null_space") {
    Field f7 = gf::mk_field(7, 1);
    CHECK(linalg::null_space(Matrix::identity(f7, 3)).dim() == 0);
    CHECK(linalg::null_space(Matrix::zero(f7, 2, 2)).dim() == 2);
    auto ns = linalg::null_space(mat(f7, {{1, 2}, {2, 4}}));
    REQUIRE(ns.dim() == 1);
    // Direct check: 1*2 + 2*(-1) = 0, i.e. the kernel is span{(2,-1)}.
    CHECK(ns.contains(mat(f7, {{2, -1}})));
}

TEST_CASE("null_space rows annihilate and dimensions add up") {
    std::mt19937_64 rng(5);
    Field f = gf::mk_field(3, 2);
    for (int it = 0; it < 30; ++it) {
        Matrix m = random_matrix(f, 4, rng);
        auto r = linalg::rref(m);
        auto ns = linalg::null_space(m);
        CHECK(ns.dim() == 4 - r.rank);
        for (std::size_t i = 0; i < ns.dim(); ++i) {
            // M v^T = 0 for each basis row v.
            CHECK((m * ns.basis().row(i).transpose()).is_zero());
        }
    }
}

TEST_CASE("solve_sylvester_set") {
    Field f7 = gf::mk_field(7, 1);
    SUBCASE("identity pair gives the full matrix space") {
        auto s = linalg::solve_sylvester_set({{Matrix::identity(f7, 2), Matrix::identity(f7, 2)}});
        CHECK(s.dim() == 4);
    }
    SUBCASE("2m = 3m forces m = 0") {
        auto s = linalg::solve_sylvester_set({{mat(f7, {{2}}), mat(f7, {{3}})}});
        CHECK(s.dim() == 0);
    }
    SUBCASE("commutant of an irreducible rotation over GF(3) is GF(9)") {
        Field f3 = gf::mk_field(3, 1);
        Matrix rot = mat(f3, {{0, 1}, {-1, 0}});
        auto basis = linalg::commutant({rot});
        REQUIRE(basis.size() == 2);
        // Spanned by I and the rotation itself.
        auto s = linalg::solve_sylvester_set({{rot, rot}});
        CHECK(s.contains(Matrix::identity(f3, 2).flatten()));
        CHECK(s.contains(rot.flatten()));
    }
}

TEST_CASE("commutant properties") {
    Field f7 = gf::mk_field(7, 1);
    SUBCASE("identity has full commutant") {
        CHECK(linalg::commutant({Matrix::identity(f7, 2)}).size() == 4);
    }
    SUBCASE("S3 permutation action on F^3 has 2-dimensional commutant") {
        Matrix swap01 = mat(f7, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
        Matrix cycle = mat(f7, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
        auto basis = linalg::commutant({swap01, cycle});
        CHECK(basis.size() == 2);  // scalars + all-ones
        for (const auto& b : basis) {
            CHECK(b * swap01 == swap01 * b);
            CHECK(b * cycle == cycle * b);
        }
        // Closure under multiplication.
        auto span = linalg::solve_sylvester_set({{swap01, swap01}, {cycle, cycle}});
        for (const auto& x : basis)
            for (const auto& y : basis) CHECK(span.contains((x * y).flatten()));
    }
}

TEST_CASE("spin") {
    Field f7 = gf::mk_field(7, 1);
    Matrix cycle = mat(f7, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    SUBCASE("full and zero seeds are fixed points") {
        CHECK(linalg::spin(Subspace::full(f7, 3), {cycle}) == Subspace::full(f7, 3));
        CHECK(linalg::spin(Subspace(f7, 3), {cycle}).dim() == 0);
    }
    SUBCASE("a cycle is transitive on coordinates") {
        auto seed = Subspace::from_spanning(mat(f7, {{1, 0, 0}}));
        CHECK(linalg::spin(seed, {cycle}) == Subspace::full(f7, 3));
    }
    SUBCASE("invariance of the output") {
        std::mt19937_64 rng(17);
        Field f3 = gf::mk_field(3, 1);
        for (int it = 0; it < 20; ++it) {
            Matrix g1 = random_matrix(f3, 4, rng);
            Matrix g2 = random_matrix(f3, 4, rng);
            Matrix seedm(f3, 1, 4);
            for (std::size_t j = 0; j < 4; ++j) seedm.at(0, j) = FieldElem::from_index(f3, rng() % 3);
            auto s = linalg::spin(Subspace::from_spanning(seedm), {g1, g2});
            for (std::size_t i = 0; i < s.dim(); ++i) {
                CHECK(s.contains(s.basis().row(i) * g1));
                CHECK(s.contains(s.basis().row(i) * g2));
            }
        }
    }
}

TEST_CASE("min_poly") {
    Field f7 = gf::mk_field(7, 1);
    CHECK(linalg::min_poly(Matrix::identity(f7, 4)) == gf::Poly::from_ints(f7, {-1, 1}));
    Matrix cycle = mat(f7, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(linalg::min_poly(cycle) == gf::Poly::from_ints(f7, {-1, 0, 0, 1}));

    // Jordan block with eigenvalue 1 in characteristic p: (s-1)^p = s^p - 1.
    Field f3 = gf::mk_field(3, 1);
    Matrix j = mat(f3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(linalg::min_poly(j) == gf::Poly::from_ints(f3, {-1, 0, 0, 1}));

    std::mt19937_64 rng(23);
    for (int it = 0; it < 20; ++it) {
        Matrix m = random_matrix(f3, 4, rng);
        CHECK(linalg::eval_poly(linalg::min_poly(m), m).is_zero());
    }
}

TEST_CASE("subspace canonical form") {
    Field f5 = gf::mk_field(5, 1);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        Matrix m = random_matrix(f5, 3, rng);
        // Row space is unchanged under left-multiplication by an invertible matrix.
        Matrix t = random_matrix(f5, 3, rng);
        if (!t.try_inverse()) continue;
        CHECK(linalg::row_space(m) == linalg::row_space(t * m));
    }
    // Different subspaces have different canonical bases.
    CHECK(linalg::row_space(mat(f5, {{1, 0}})) != linalg::row_space(mat(f5, {{0, 1}})));
}

TEST_CASE("CoordSolver") {
    Field f7 = gf::mk_field(7, 1);
    Matrix rows = mat(f7, {{1, 2, 3}, {0, 1, 1}, {1, 3, 4}});  // rank 2, dependent third row
    linalg::CoordSolver cs(rows);
    CHECK(cs.rank() == 2);
    Matrix v = mat(f7, {{2, 5, 7}});
    auto x = cs.solve(v);
    REQUIRE(x.has_value());
    Matrix xr(f7, 1, 3);
    for (std::size_t i = 0; i < 3; ++i) xr.at(0, i) = (*x)[i];
    CHECK(xr * rows == v);
    CHECK_FALSE(cs.solve(mat(f7, {{0, 0, 1}})).has_value());
}
