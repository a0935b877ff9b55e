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

#ifndef MODIND_INDUCT_HPP
#define MODIND_INDUCT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modind/gf.hpp"
#include "modind/linalg.hpp"
#include "modind/modrep.hpp"

namespace modind::induct {

/**
 * Induction problem data for a subgroup H of prime index p in G = <H, a>.
 * Everything is given concretely as matrices: the images h_i of the H
 * generators under an irreducible representation, the images conj_i of the
 * a-conjugates a h_i a^-1 (same order), and the image a_p of a^p (which lies
 * in H since G/H has order p).
 */
struct InductionInput {
    std::size_t p = 0;
    modrep::Representation rep;
    std::vector<linalg::Matrix> conj;
    linalg::Matrix a_p;

    InductionInput() : a_p(gf::Field(), 0, 0) {}

    /// Structural checks only (sizes, fields, invertibility, p prime);
    /// throws input_error.  Irreducibility of rep is checked separately.
    void validate() const;
};

/**
 * Data attached to the stable case: an intertwiner alpha realizing the
 * conjugation action on the representation, the element lambda =
 * alpha^-p * (a^p image) of the endomorphism field Delta, and the action of
 * alpha on Delta (a Frobenius power of order 1 or p).
 */
struct StableData {
    linalg::Matrix alpha;
    linalg::Matrix lambda_mat;
    gf::FieldElem lambda;  // lambda_mat in Delta coordinates
    std::shared_ptr<modrep::EndoField> endo;
    /// Frobenius exponent (in characteristic units) of the conjugation
    /// action delta -> alpha^-1 delta alpha on Delta = GF(q^e).
    std::size_t alpha_twist = 0;
    std::size_t order_on_delta = 1;  // 1 or p

    StableData() : alpha(gf::Field(), 0, 0), lambda_mat(gf::Field(), 0, 0) {}

    /// alpha(delta) = alpha^-1 * delta * alpha.
    linalg::Matrix alpha_of(const linalg::Matrix& delta) const;
};

/**
 * Decide whether the module is G-stable by solving conj_i * M = M * rep_i.
 * The solution space is one-dimensional over Delta when stable and zero
 * otherwise.  Returns the canonical solution with its first nonzero entry
 * (row-major) scaled to 1; invertibility is guaranteed and asserted.
 */
std::optional<linalg::Matrix> stability_test(const InductionInput& in);

/// Derive lambda and the Delta action of alpha; verifies all of the
/// conjugation identities and throws input_error when the data is
/// inconsistent.
StableData compute_stable_data(const InductionInput& in, const linalg::Matrix& alpha,
                               std::uint64_t seed = 0);

/// Induced representation in the stable case, relative to the basis
/// e_k alpha^-i a^i: generators ordered [a, h_1, ..., h_r].  a maps to the
/// block matrix with alpha on the superdiagonal and alpha*lambda in the
/// bottom-left corner; each h_i maps to diag(h_i, ..., h_i).
modrep::Representation induce_stable(const InductionInput& in, const StableData& sd);

struct NonStableInduction {
    modrep::Representation rep;  // generators ordered [a, h_1, ..., h_r]
    /// conjugates[i][j] = image of a^i h_j a^-i, i = 0..p-1.
    std::vector<std::vector<linalg::Matrix>> conjugates;
};

/// Induced representation in the non-stable case, relative to the basis
/// e_k a^i: a maps to the block cycle with the a^p image in the corner, h_j
/// to diag of its successive a-conjugates.  For p > 2 the higher conjugates
/// require enumerating the matrix group generated by rep (throws input_error
/// above `group_limit` elements, or when the conjugation assignment does not
/// extend to a group automorphism).
NonStableInduction induce_nonstable(const InductionInput& in, std::size_t group_limit = 1000000);

/// Enumerate <rep.gens> and check that h_i -> conj_i extends to a group
/// automorphism whose p-th iterate is conjugation by a_p.  Throws
/// input_error on inconsistency or when the group exceeds `group_limit`.
void deep_verify_conjugation(const InductionInput& in, std::size_t group_limit = 1000000);

/// The block cycle with lambda in the bottom-left corner (pd x pd).
linalg::Matrix x_matrix(const StableData& sd, std::size_t p, std::size_t d);
/// diag(delta, alpha(delta), ..., alpha^{p-1}(delta)); delta must lie in
/// Delta (throws input_error otherwise).
linalg::Matrix d_matrix(const StableData& sd, std::size_t p, const linalg::Matrix& delta);

using CheckList = std::vector<std::pair<std::string, bool>>;

/**
 * Verify the cyclic-algebra presentation of the commutant of the induced
 * module: X^p = lambda I, X D(delta) = D(alpha(delta)) X, commutation with
 * the induced generators, the dimension count dim Gamma = p*e against an
 * independent commutant computation, and (order-p case) simplicity probes.
 * All identities are guaranteed by the theory; a failure is an internal
 * error, reported as a false entry rather than a throw so callers can
 * surface the full list.
 */
CheckList cyclic_algebra_check(const InductionInput& in, const StableData& sd,
                               const modrep::Representation& induced, std::uint64_t seed = 0);

}  // namespace modind::induct

#endif
