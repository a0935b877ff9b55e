// Shared worked instances for the test suite.
#ifndef MODIND_TESTS_INSTANCES_HPP
#define MODIND_TESTS_INSTANCES_HPP

#include "modind/induct.hpp"

namespace modind::tests {

inline linalg::Matrix mat(const gf::Field& f,
                          const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<gf::FieldElem>> r;
    for (const auto& row : rows) {
        std::vector<gf::FieldElem> v;
        for (auto x : row) v.push_back(gf::FieldElem::from_int(f, x));
        r.push_back(std::move(v));
    }
    return linalg::Matrix::from_rows(f, r);
}

inline induct::InductionInput make_1dim(std::uint64_t q, std::size_t p, std::int64_t h,
                                        std::int64_t conj, std::int64_t a_p) {
    gf::Field f = gf::mk_field(q, 1);
    induct::InductionInput in;
    in.p = p;
    in.rep.field = f;
    in.rep.dim = 1;
    in.rep.gens = {mat(f, {{h}})};
    in.conj = {mat(f, {{conj}})};
    in.a_p = mat(f, {{a_p}});
    return in;
}

// S3 > C3 over GF(7), nontrivial character: non-stable.
inline induct::InductionInput s3c3_gf7() { return make_1dim(7, 2, 2, 4, 1); }
// C9 > C3 over GF(3), trivial module: uniserial.
inline induct::InductionInput c9c3_gf3() { return make_1dim(3, 3, 1, 1, 1); }
// C25 > C5 over GF(5), trivial module: uniserial.
inline induct::InductionInput c25c5_gf5() { return make_1dim(5, 5, 1, 1, 1); }
// C4 > C2 over GF(2), trivial module: uniserial with p = 2.
inline induct::InductionInput c4c2_gf2() { return make_1dim(2, 2, 1, 1, 1); }
// C3 > 1 over GF(7): regular module, s^3 - 1 splits.
inline induct::InductionInput c3_gf7() { return make_1dim(7, 3, 1, 1, 1); }
// C3 > 1 over GF(5): s^3 - 1 = (s-1)(s^2+s+1).
inline induct::InductionInput c3_gf5() { return make_1dim(5, 3, 1, 1, 1); }
// C18 > C6 over GF(7), h -> 3, a^3 = h: s^3 - 3 irreducible.
inline induct::InductionInput c18c6_gf7() { return make_1dim(7, 3, 3, 3, 3); }

// Q8 > C4 over GF(3): stable, alpha of order 2 on Delta = GF(9).
inline induct::InductionInput q8c4_gf3() {
    gf::Field f = gf::mk_field(3, 1);
    induct::InductionInput in;
    in.p = 2;
    in.rep.field = f;
    in.rep.dim = 2;
    in.rep.gens = {mat(f, {{0, 1}, {-1, 0}})};
    in.conj = {mat(f, {{0, -1}, {1, 0}})};
    in.a_p = mat(f, {{-1, 0}, {0, -1}});
    return in;
}

// C6 > C3 over GF(4), h -> w (cube root of unity), a^2 = h: uniserial with a
// nontrivial xi.
inline induct::InductionInput c6c3_gf4() {
    gf::Field f = gf::mk_field(2, 2);
    gf::FieldElem w(f, {0, 1});
    induct::InductionInput in;
    in.p = 2;
    in.rep.field = f;
    in.rep.dim = 1;
    in.rep.gens = {linalg::Matrix::from_rows(f, {{w}})};
    in.conj = {linalg::Matrix::from_rows(f, {{w}})};
    in.a_p = {linalg::Matrix::from_rows(f, {{w}})};
    return in;
}

}  // namespace modind::tests

#endif
