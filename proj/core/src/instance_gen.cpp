/*
   Copyright 2026 modind contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "modind/instance_gen.hpp"

#include <random>

namespace modind::gen {

using gf::Field;
using gf::FieldElem;
using linalg::Matrix;

namespace {

/// Writes elements of GF(q^p) in the F-basis {1, t, ..., t^(p-1)} where t is
/// the canonical generator of the big field; q = |F| = q0^k.
class DeltaCoords {
   public:
    DeltaCoords(const Field& base, const Field& ext, std::size_t p)
        : base_(base), ext_(ext), p_(p), embed_(gf::mk_field(base->characteristic, 1), ext),
          f_embed_(base, ext), solver_(basis_rows(base, ext, p)) {}

    /// Multiplication-by-x matrix over F, acting on row vectors.
    Matrix mult_matrix(const FieldElem& x) const {
        std::size_t k = base_->degree;
        FieldElem t(ext_, unit_coeffs(ext_, 1));
        Matrix m(base_, p_, p_);
        for (std::size_t i = 0; i < p_; ++i) {
            FieldElem y = t.pow(static_cast<std::int64_t>(i)) * x;
            Matrix row(gf::mk_field(ext_->characteristic, 1), 1, ext_->degree);
            for (std::size_t c = 0; c < ext_->degree; ++c) {
                std::uint64_t v = c < y.coeffs().size() ? y.coeffs()[c] : 0;
                row.at(0, c) = FieldElem::from_index(row.field(), v);
            }
            auto coords = solver_.solve(row);
            require_internal(coords.has_value(), "field element outside its own basis");
            for (std::size_t j = 0; j < p_; ++j) {
                std::vector<gf::coeff_t> cs(k, 0);
                for (std::size_t a = 0; a < k; ++a)
                    cs[a] = static_cast<gf::coeff_t>((*coords)[a * p_ + j].index());
                m.at(i, j) = FieldElem(base_, std::move(cs));
            }
        }
        return m;
    }

    const gf::Embedding& f_embed() const { return f_embed_; }

   private:
    static std::vector<gf::coeff_t> unit_coeffs(const Field& f, std::size_t i) {
        std::vector<gf::coeff_t> cs(f->degree, 0);
        if (f->degree > 0) cs[i] = 1;
        return cs;
    }

    /// Prime-field coordinate rows of the products u^a * t^j, the F-basis of
    /// GF(q^p) unpacked over the prime field.
    static Matrix basis_rows(const Field& base, const Field& ext, std::size_t p) {
        Field prime = gf::mk_field(ext->characteristic, 1);
        gf::Embedding f_embed(base, ext);
        std::size_t k = base->degree;
        FieldElem t(ext, unit_coeffs(ext, 1));
        Matrix rows(prime, k * p, ext->degree);
        for (std::size_t a = 0; a < k; ++a) {
            FieldElem ua = f_embed(FieldElem(base, unit_coeffs(base, a)));
            for (std::size_t j = 0; j < p; ++j) {
                FieldElem prod = ua * t.pow(static_cast<std::int64_t>(j));
                for (std::size_t c = 0; c < prod.coeffs().size(); ++c)
                    rows.at(a * p + j, c) = FieldElem::from_index(prime, prod.coeffs()[c]);
            }
        }
        require_internal(linalg::rref(rows).rank == k * p, "degenerate field basis");
        return rows;
    }

    Field base_;
    Field ext_;
    std::size_t p_;
    gf::Embedding embed_;
    gf::Embedding f_embed_;
    linalg::CoordSolver solver_;
};

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, gf::field_order(f) - 1);
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = FieldElem::from_index(f, dist(rng));
        if (m.try_inverse().has_value()) return m;
    }
}

FieldElem random_nonzero(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, gf::field_order(f) - 1);
    return FieldElem::from_index(f, dist(rng));
}

}  // namespace

induct::InductionInput random_instance(std::size_t p, const Field& base, std::uint64_t seed) {
    require_input(base != nullptr, "random_instance: null field");
    require_input(base->characteristic != p,
                  "random_instance: characteristic must differ from the index p");
    Field ext = gf::mk_field(base->characteristic, base->degree * p);
    DeltaCoords dc(base, ext, p);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

    FieldElem g = gf::primitive_element(ext);
    // g -> g^q is the Frobenius over F, an automorphism of the cyclic group
    // <g> whose p-th iterate is the identity.
    FieldElem gq = g.frobenius(static_cast<std::int64_t>(base->degree));
    FieldElem scalar = dc.f_embed()(random_nonzero(base, rng));

    induct::InductionInput in;
    in.p = p;
    in.rep.field = base;
    in.rep.dim = p;
    in.rep.gens = {dc.mult_matrix(g)};
    in.conj = {dc.mult_matrix(gq)};
    in.a_p = dc.mult_matrix(scalar);

    Matrix t = random_invertible(base, p, rng);
    Matrix ti = t.inverse();
    for (auto& m : in.rep.gens) m = t * m * ti;
    for (auto& m : in.conj) m = t * m * ti;
    in.a_p = t * in.a_p * ti;
    in.validate();
    return in;
}

induct::InductionInput random_inner_instance(std::size_t p, const Field& base,
                                             std::uint64_t seed) {
    require_input(base != nullptr, "random_inner_instance: null field");
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    FieldElem c = random_nonzero(base, rng);
    FieldElem b = random_nonzero(base, rng);
    induct::InductionInput in;
    in.p = p;
    in.rep.field = base;
    in.rep.dim = 1;
    in.rep.gens = {Matrix::scalar(base, 1, c)};
    in.conj = {Matrix::scalar(base, 1, c)};
    in.a_p = Matrix::scalar(base, 1, b);
    in.validate();
    return in;
}

}  // namespace modind::gen
