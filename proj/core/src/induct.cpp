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

#include "modind/induct.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <random>

namespace modind::induct {

using gf::FieldElem;
using linalg::Matrix;

namespace {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> matrix_key(const Matrix& m) {
    std::vector<std::uint64_t> key;
    key.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) key.push_back(m.at(i, j).index());
    return key;
}

/**
 * BFS enumeration of the matrix group generated by rep.gens, carrying along
 * the images under the assignment gen_i -> image_i.  Verifies on the fly
 * that the assignment is consistent (every relation satisfied by the
 * generators is satisfied by the images).
 */
class GroupExtension {
   public:
    GroupExtension(const std::vector<Matrix>& gens, const std::vector<Matrix>& images,
                   std::size_t limit) {
        const auto& f = gens.front().field();
        const std::size_t d = gens.front().rows();
        Matrix id = Matrix::identity(f, d);
        table_.emplace(matrix_key(id), id);
        std::deque<Matrix> queue{id};
        while (!queue.empty()) {
            Matrix g = queue.front();
            queue.pop_front();
            Matrix img = table_.at(matrix_key(g));
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Matrix g2 = g * gens[i];
                Matrix img2 = img * images[i];
                auto key = matrix_key(g2);
                auto it = table_.find(key);
                if (it == table_.end()) {
                    if (table_.size() >= limit)
                        throw input_error(
                            "group enumeration limit exceeded while extending the conjugation "
                            "assignment");
                    table_.emplace(std::move(key), img2);
                    queue.push_back(std::move(g2));
                } else if (it->second != img2) {
                    throw input_error(
                        "conjugation data does not extend to a group automorphism (inconsistent "
                        "images)");
                }
            }
        }
    }

    const Matrix& apply(const Matrix& m) const {
        auto it = table_.find(matrix_key(m));
        require_internal(it != table_.end(), "conjugate image fell outside the enumerated group");
        return it->second;
    }

    std::size_t size() const { return table_.size(); }

   private:
    std::map<std::vector<std::uint64_t>, Matrix> table_;
};

Matrix random_delta(const modrep::EndoField& endo, std::mt19937_64& rng) {
    const auto& f = endo.base();
    const std::uint64_t q = gf::field_order(f);
    Matrix m = Matrix::zero(f, endo.basis().front().rows(), endo.basis().front().cols());
    for (const auto& b : endo.basis()) m = m + b * FieldElem::from_index(f, rng() % q);
    return m;
}

}  // namespace

void InductionInput::validate() const {
    require_input(is_prime(p), "index p must be prime");
    rep.validate();
    const std::size_t d = rep.dim;
    require_input(conj.size() == rep.gens.size(),
                  "conj_gens must match h_gens in number and order");
    for (const auto& m : conj) {
        require_input(same_field(m.field(), rep.field) && m.rows() == d && m.cols() == d,
                      "conj_gens must be d x d over the representation field");
        require_input(m.try_inverse().has_value(), "conj_gens must be invertible");
    }
    require_input(same_field(a_p.field(), rep.field) && a_p.rows() == d && a_p.cols() == d,
                  "a_p must be d x d over the representation field");
    require_input(a_p.try_inverse().has_value(), "a_p must be invertible");
}

Matrix StableData::alpha_of(const Matrix& delta) const {
    return alpha.inverse() * delta * alpha;
}

std::optional<Matrix> stability_test(const InductionInput& in) {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t i = 0; i < in.rep.gens.size(); ++i) pairs.emplace_back(in.conj[i], in.rep.gens[i]);
    auto basis = linalg::sylvester_basis(pairs);
    if (basis.empty()) return std::nullopt;
    Matrix alpha = basis.front();
    for (std::size_t i = 0; i < alpha.rows() && !alpha.is_zero(); ++i)
        for (std::size_t j = 0; j < alpha.cols(); ++j)
            if (!alpha.at(i, j).is_zero()) {
                alpha = alpha * alpha.at(i, j).inv();
                i = alpha.rows();
                break;
            }
    // Any nonzero solution is a unit times a fixed intertwiner, hence
    // invertible by Schur's lemma.
    require_internal(alpha.try_inverse().has_value(), "stability intertwiner is singular");
    return alpha;
}

StableData compute_stable_data(const InductionInput& in, const Matrix& alpha, std::uint64_t seed) {
    StableData sd;
    sd.alpha = alpha;
    Matrix alpha_inv = alpha.inverse();
    for (std::size_t i = 0; i < in.rep.gens.size(); ++i)
        require_input(in.conj[i] == alpha * in.rep.gens[i] * alpha_inv,
                      "conjugation identity fails for a generator (bad conj_gens or alpha)");

    const std::size_t p = in.p;
    sd.lambda_mat = alpha.pow(-static_cast<std::int64_t>(p)) * in.a_p;
    sd.endo = std::make_shared<modrep::EndoField>(in.rep, seed);
    const auto& endo = *sd.endo;
    require_input(endo.contains(sd.lambda_mat),
                  "lambda does not centralize the representation (inconsistent a_p)");
    require_input(sd.lambda_mat.try_inverse().has_value(), "lambda must be invertible");
    require_input(alpha_inv * sd.lambda_mat * alpha == sd.lambda_mat,
                  "lambda is not fixed by alpha (inconsistent input data)");
    Matrix ap_pow = alpha.pow(-static_cast<std::int64_t>(p));
    Matrix am_pow = alpha.pow(static_cast<std::int64_t>(p));
    Matrix lambda_inv = sd.lambda_mat.inverse();
    for (const auto& delta : endo.basis())
        require_input(ap_pow * delta * am_pow == sd.lambda_mat * delta * lambda_inv,
                      "alpha^p is not conjugation by lambda (inconsistent input data)");

    sd.lambda = endo.to_field(sd.lambda_mat);

    // The conjugation action of alpha on Delta = GF(q^e) is an F-algebra
    // automorphism, so it is x -> x^(q^j) for a unique j.
    const std::size_t e = endo.e();
    const std::size_t k = in.rep.field->degree;
    Matrix prim_img = alpha_inv * endo.primitive() * alpha;
    require_input(endo.contains(prim_img), "alpha does not normalize the endomorphism field");
    FieldElem target = endo.to_field(prim_img);
    FieldElem base = endo.to_field(endo.primitive());
    bool found = false;
    std::size_t j = 0;
    for (; j < e; ++j)
        if (base.frobenius(static_cast<std::int64_t>(k * j)) == target) {
            found = true;
            break;
        }
    require_internal(found, "action of alpha on Delta is not a Frobenius power");
    sd.alpha_twist = k * j;
    sd.order_on_delta = j == 0 ? 1 : e / std::gcd(j, e);
    require_input(sd.order_on_delta == 1 || sd.order_on_delta == p,
                  "alpha acts on Delta with order other than 1 or p (inconsistent data)");
    return sd;
}

modrep::Representation induce_stable(const InductionInput& in, const StableData& sd) {
    const std::size_t p = in.p, d = in.rep.dim;
    const auto& f = in.rep.field;
    Matrix a_big = Matrix::zero(f, p * d, p * d);
    for (std::size_t i = 0; i + 1 < p; ++i) a_big.set_block(i * d, (i + 1) * d, sd.alpha);
    a_big.set_block((p - 1) * d, 0, sd.alpha * sd.lambda_mat);
    modrep::Representation out;
    out.field = f;
    out.dim = p * d;
    out.gens.push_back(a_big);
    for (const auto& h : in.rep.gens) {
        Matrix h_big = Matrix::zero(f, p * d, p * d);
        for (std::size_t i = 0; i < p; ++i) h_big.set_block(i * d, i * d, h);
        out.gens.push_back(h_big);
    }
    return out;
}

NonStableInduction induce_nonstable(const InductionInput& in, std::size_t group_limit) {
    require_input(!stability_test(in).has_value(),
                  "induce_nonstable called on a stable input");
    const std::size_t p = in.p, d = in.rep.dim;
    const auto& f = in.rep.field;

    NonStableInduction out;
    out.conjugates.push_back(in.rep.gens);
    out.conjugates.push_back(in.conj);
    if (p > 2) {
        GroupExtension ext(in.rep.gens, in.conj, group_limit);
        for (std::size_t i = 2; i < p; ++i) {
            std::vector<Matrix> next;
            for (const auto& m : out.conjugates.back()) next.push_back(ext.apply(m));
            out.conjugates.push_back(std::move(next));
        }
    }

    Matrix a_big = Matrix::zero(f, p * d, p * d);
    for (std::size_t i = 0; i + 1 < p; ++i)
        a_big.set_block(i * d, (i + 1) * d, Matrix::identity(f, d));
    a_big.set_block((p - 1) * d, 0, in.a_p);
    out.rep.field = f;
    out.rep.dim = p * d;
    out.rep.gens.push_back(a_big);
    for (std::size_t g = 0; g < in.rep.gens.size(); ++g) {
        Matrix h_big = Matrix::zero(f, p * d, p * d);
        for (std::size_t i = 0; i < p; ++i) h_big.set_block(i * d, i * d, out.conjugates[i][g]);
        out.rep.gens.push_back(h_big);
    }
    return out;
}

void deep_verify_conjugation(const InductionInput& in, std::size_t group_limit) {
    GroupExtension ext(in.rep.gens, in.conj, group_limit);
    Matrix ap_inv = in.a_p.inverse();
    for (std::size_t g = 0; g < in.rep.gens.size(); ++g) {
        Matrix m = in.rep.gens[g];
        for (std::size_t i = 0; i < in.p; ++i) m = ext.apply(m);
        require_input(m == in.a_p * in.rep.gens[g] * ap_inv,
                      "p-th iterate of the conjugation map is not conjugation by a_p");
    }
}

Matrix x_matrix(const StableData& sd, std::size_t p, std::size_t d) {
    const auto& f = sd.alpha.field();
    Matrix x = Matrix::zero(f, p * d, p * d);
    for (std::size_t i = 0; i + 1 < p; ++i) x.set_block(i * d, (i + 1) * d, Matrix::identity(f, d));
    x.set_block((p - 1) * d, 0, sd.lambda_mat);
    return x;
}

Matrix d_matrix(const StableData& sd, std::size_t p, const Matrix& delta) {
    require_input(sd.endo->contains(delta), "d_matrix argument is not an endomorphism");
    const std::size_t d = delta.rows();
    Matrix out = Matrix::zero(delta.field(), p * d, p * d);
    Matrix cur = delta;
    for (std::size_t i = 0; i < p; ++i) {
        out.set_block(i * d, i * d, cur);
        cur = sd.alpha_of(cur);
    }
    return out;
}

CheckList cyclic_algebra_check(const InductionInput& in, const StableData& sd,
                               const modrep::Representation& induced, std::uint64_t seed) {
    CheckList checks;
    const std::size_t p = in.p, d = in.rep.dim;
    const auto& endo = *sd.endo;
    const std::size_t e = endo.e();
    Matrix X = x_matrix(sd, p, d);

    Matrix lambda_block = Matrix::zero(induced.field, p * d, p * d);
    for (std::size_t i = 0; i < p; ++i) lambda_block.set_block(i * d, i * d, sd.lambda_mat);
    checks.emplace_back("X^p = lambda I", X.pow(static_cast<std::int64_t>(p)) == lambda_block);

    std::mt19937_64 rng(seed ^ 0xc1c11caULL);
    std::vector<Matrix> deltas = endo.basis();
    for (int i = 0; i < 20; ++i) deltas.push_back(random_delta(endo, rng));
    bool twist_ok = true;
    for (const auto& delta : deltas)
        twist_ok = twist_ok && X * d_matrix(sd, p, delta) == d_matrix(sd, p, sd.alpha_of(delta)) * X;
    checks.emplace_back("X D(delta) = D(alpha(delta)) X", twist_ok);

    bool commute_ok = true;
    for (const auto& g : induced.gens) {
        commute_ok = commute_ok && g * X == X * g;
        for (const auto& delta : endo.basis()) {
            Matrix dd = d_matrix(sd, p, delta);
            commute_ok = commute_ok && g * dd == dd * g;
        }
    }
    checks.emplace_back("X and D(delta) centralize the induced module", commute_ok);

    // Span of the p*e products D(delta_j) X^i versus an independent
    // commutant computation.
    std::vector<Matrix> gamma_basis;
    Matrix xp = Matrix::identity(induced.field, p * d);
    for (std::size_t i = 0; i < p; ++i) {
        for (const auto& delta : endo.basis()) gamma_basis.push_back(d_matrix(sd, p, delta) * xp);
        xp = xp * X;
    }
    std::vector<Matrix> flat_rows;
    for (const auto& m : gamma_basis) flat_rows.push_back(m.flatten());
    linalg::Subspace gamma_span = linalg::row_space(linalg::vstack(flat_rows));
    checks.emplace_back("dim Gamma = p e (products independent)", gamma_span.dim() == p * e);
    auto comm = linalg::commutant(induced.gens);
    checks.emplace_back("dim Gamma matches independent commutant", comm.size() == p * e);
    bool span_ok = comm.size() == gamma_span.dim();
    for (const auto& c : comm) span_ok = span_ok && gamma_span.contains(c.flatten());
    checks.emplace_back("Gamma spans the full commutant", span_ok);

    if (sd.order_on_delta == p) {
        // Simplicity probes: a nonzero gamma generates Gamma as a two-sided
        // ideal.
        const std::uint64_t q = gf::field_order(in.rep.field);
        bool simple_ok = true;
        for (int probe = 0; probe < 10; ++probe) {
            Matrix gamma = Matrix::zero(induced.field, p * d, p * d);
            while (gamma.is_zero()) {
                gamma = Matrix::zero(induced.field, p * d, p * d);
                for (const auto& b : gamma_basis)
                    gamma = gamma + b * FieldElem::from_index(in.rep.field, rng() % q);
            }
            std::vector<Matrix> ideal_rows;
            for (const auto& l : gamma_basis)
                for (const auto& r : gamma_basis) ideal_rows.push_back((l * gamma * r).flatten());
            simple_ok =
                simple_ok && linalg::row_space(linalg::vstack(ideal_rows)).dim() == p * e;
        }
        checks.emplace_back("two-sided ideal probes span Gamma (simplicity)", simple_ok);
        checks.emplace_back("dim over the fixed field is p^2", p * e == p * p * (e / p));
    }
    return checks;
}

}  // namespace modind::induct
