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

#include "modind/modrep.hpp"

#include <random>

namespace modind::modrep {

using gf::FieldElem;
using linalg::Matrix;
using linalg::Subspace;

void Representation::validate() const {
    require_input(field != nullptr, "representation has no field");
    require_input(dim >= 1, "representation dimension must be positive");
    require_input(!gens.empty(), "representation needs at least one generator (use the identity for the trivial group)");
    for (const auto& g : gens) {
        require_input(g.rows() == dim && g.cols() == dim, "generator has wrong shape");
        require_input(gf::same_field(g.field(), field), "generator field mismatch");
        require_input(g.try_inverse().has_value(), "generator matrix is singular");
    }
}

// ----------------------------------------------------------- irreducibility

namespace {

/// Spin a single row vector; returns the generated submodule.
Subspace spin_vector(const Representation& rep, const std::vector<FieldElem>& v) {
    return linalg::spin(Subspace::from_spanning(Matrix::from_rows(rep.field, {v})), rep.gens);
}

}  // namespace

IrreducibilityResult is_irreducible(const Representation& rep, std::uint64_t seed) {
    rep.validate();
    const std::size_t d = rep.dim;
    const gf::Field& f = rep.field;
    if (d == 1) return {true, std::nullopt, true};

    const std::uint64_t q = gf::field_order(f);
    bool exhaustive = true;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > kExhaustiveIrreducibilityBound / q) {
            exhaustive = false;
            break;
        }
        total *= q;
    }

    if (exhaustive) {
        // Every 1-dimensional subspace: vectors normalized so the first
        // nonzero coordinate is 1.
        for (std::size_t pivot = 0; pivot < d; ++pivot) {
            std::uint64_t tail_count = 1;
            for (std::size_t i = pivot + 1; i < d; ++i) tail_count *= q;
            for (std::uint64_t t = 0; t < tail_count; ++t) {
                std::vector<FieldElem> v(d, FieldElem::zero(f));
                v[pivot] = FieldElem::one(f);
                std::uint64_t rest = t;
                for (std::size_t i = pivot + 1; i < d; ++i) {
                    v[i] = FieldElem::from_index(f, rest % q);
                    rest /= q;
                }
                Subspace s = spin_vector(rep, v);
                if (s.dim() < d) return {false, s, true};
            }
        }
        return {true, std::nullopt, true};
    }

    // Heuristic seed set: standard basis vectors, then null vectors of seeded
    // random commutant-algebra combinations.
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<FieldElem> v(d, FieldElem::zero(f));
        v[i] = FieldElem::one(f);
        Subspace s = spin_vector(rep, v);
        if (s.dim() < d) return {false, s, false};
    }
    auto comm = linalg::commutant(rep.gens);
    std::mt19937_64 rng(seed ^ 0xa11ce5u);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix c = Matrix::zero(f, d, d);
        for (const auto& b : comm) c = c + b * FieldElem::from_index(f, rng() % q);
        if (c.is_zero()) continue;
        Subspace ker = linalg::left_null_space(c);
        for (std::size_t i = 0; i < ker.dim(); ++i) {
            Subspace s = spin_vector(rep, ker.basis().row_vector(i));
            if (s.dim() < d) return {false, s, false};
        }
    }
    return {true, std::nullopt, false};
}

// ---------------------------------------------------------------- EndoField

namespace {

struct PrimitiveSearch {
    Matrix primitive;
    gf::Poly minpoly;
};

PrimitiveSearch find_primitive(const std::vector<Matrix>& comm, const gf::Field& f, std::size_t e,
                               std::size_t d, std::uint64_t seed) {
    auto try_candidate = [&](const Matrix& c) -> std::optional<PrimitiveSearch> {
        gf::Poly mp = linalg::min_poly(c);
        if (static_cast<std::size_t>(mp.degree()) == e && gf::is_irreducible_poly(mp))
            return PrimitiveSearch{c, mp};
        return std::nullopt;
    };
    for (const auto& b : comm)
        if (auto r = try_candidate(b)) return *r;
    for (std::size_t i = 0; i < comm.size(); ++i)
        for (std::size_t j = i + 1; j < comm.size(); ++j)
            if (auto r = try_candidate(comm[i] + comm[j])) return *r;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::uint64_t q = gf::field_order(f);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix c = Matrix::zero(f, d, d);
        for (const auto& b : comm) c = c + b * FieldElem::from_index(f, rng() % q);
        if (auto r = try_candidate(c)) return *r;
    }
    throw input_error("no primitive element found: commutant is not a field (reducible representation?)");
}

}  // namespace

EndoField::EndoField(const Representation& rep, std::uint64_t seed)
    : base_(rep.field),
      ext_(nullptr),
      primitive_(rep.field, 0, 0),
      minpoly_(rep.field),
      root_(),
      embed_([&] {
          rep.validate();
          auto comm = linalg::commutant(rep.gens);
          const std::size_t e = comm.size();
          require_input(rep.dim % e == 0, "commutant dimension does not divide the module dimension");
          auto found = find_primitive(comm, rep.field, e, rep.dim, seed);
          primitive_ = found.primitive;
          minpoly_ = found.minpoly;
          ext_ = gf::mk_field(rep.field->characteristic, rep.field->degree * e);
          return gf::Embedding(base_, ext_);
      }()),
      power_solver_([&] {
          const std::size_t e = static_cast<std::size_t>(minpoly_.degree());
          basis_.reserve(e);
          Matrix p = Matrix::identity(base_, rep.dim);
          std::vector<Matrix> flat;
          for (std::size_t i = 0; i < e; ++i) {
              basis_.push_back(p);
              flat.push_back(p.flatten());
              p = p * primitive_;
          }
          return linalg::CoordSolver(linalg::vstack(flat));
      }()),
      ext_solver_([&] {
          // Root of the minimal polynomial inside GF(q^e), canonical choice.
          std::vector<FieldElem> mc;
          for (const auto& c : minpoly_.coeffs()) mc.push_back(embed_(c));
          auto rs = gf::roots(gf::Poly(ext_, std::move(mc)));
          require_internal(!rs.empty(), "minimal polynomial has no root in the extension field");
          root_ = rs.front();
          const std::size_t e = basis_.size();
          const std::size_t k = base_->degree;
          power_images_.reserve(e);
          FieldElem r = FieldElem::one(ext_);
          for (std::size_t i = 0; i < e; ++i) {
              power_images_.push_back(r);
              r = r * root_;
          }
          // Prime-field linear system expressing ext elements over the
          // basis {embed(F-basis_j) * root^i}.
          prime_ = gf::mk_field(base_->characteristic, 1);
          Matrix sys(prime_, e * k, e * k);
          for (std::size_t i = 0; i < e; ++i)
              for (std::size_t j = 0; j < k; ++j) {
                  std::vector<gf::coeff_t> fc(k, 0);
                  fc[j] = 1;
                  FieldElem w = embed_(FieldElem(base_, std::move(fc))) * power_images_[i];
                  for (std::size_t l = 0; l < e * k; ++l)
                      sys.at(i * k + j, l) = FieldElem::from_int(prime_, w.coeffs()[l]);
              }
          return linalg::CoordSolver(sys);
      }()) {}

gf::FieldElem EndoField::to_field(const Matrix& m) const {
    auto coords = power_solver_.solve(m.flatten());
    require_input(coords.has_value(), "matrix not in the endomorphism field");
    FieldElem r = FieldElem::zero(ext_);
    for (std::size_t i = 0; i < coords->size(); ++i) r = r + embed_((*coords)[i]) * power_images_[i];
    return r;
}

linalg::Matrix EndoField::from_field(const gf::FieldElem& x) const {
    require_input(gf::same_field(x.field(), ext_), "element not in the extension field");
    const std::size_t e = basis_.size();
    const std::size_t k = base_->degree;
    Matrix v(prime_, 1, e * k);
    for (std::size_t l = 0; l < e * k; ++l) v.at(0, l) = FieldElem::from_int(prime_, x.coeffs()[l]);
    auto coords = ext_solver_.solve(v);
    require_internal(coords.has_value(), "extension coordinate solve failed");
    Matrix m = Matrix::zero(base_, basis_[0].rows(), basis_[0].cols());
    for (std::size_t i = 0; i < e; ++i) {
        std::vector<gf::coeff_t> fc(k, 0);
        for (std::size_t j = 0; j < k; ++j) fc[j] = (*coords)[i * k + j].coeffs()[0];
        m = m + basis_[i] * FieldElem(base_, std::move(fc));
    }
    return m;
}

bool EndoField::contains(const Matrix& m) const { return power_solver_.solve(m.flatten()).has_value(); }

// ---------------------------------------------------------------- homspaces

std::vector<linalg::Matrix> hom_space(const Representation& r1, const Representation& r2) {
    require_input(gf::same_field(r1.field, r2.field), "hom_space: field mismatch");
    require_input(r1.gens.size() == r2.gens.size(), "hom_space: generator count mismatch");
    require_input(r1.dim == r2.dim, "hom_space: dimension mismatch");
    std::vector<std::pair<Matrix, Matrix>> pairs;
    pairs.reserve(r1.gens.size());
    for (std::size_t i = 0; i < r1.gens.size(); ++i) pairs.emplace_back(r1.gens[i], r2.gens[i]);
    return linalg::sylvester_basis(pairs);
}

std::optional<linalg::Matrix> is_equivalent(const Representation& r1, const Representation& r2) {
    if (r1.dim != r2.dim) return std::nullopt;
    for (const auto& m : hom_space(r1, r2)) {
        if (m.try_inverse().has_value()) return m;
    }
    return std::nullopt;
}

}  // namespace modind::modrep
