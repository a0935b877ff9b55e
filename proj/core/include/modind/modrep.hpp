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

#ifndef MODIND_MODREP_HPP
#define MODIND_MODREP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "modind/gf.hpp"
#include "modind/linalg.hpp"

namespace modind::modrep {

/// A group representation given by the images of a fixed ordered generating
/// set: a field, a dimension, and one invertible matrix per generator.
struct Representation {
    gf::Field field;
    std::size_t dim = 0;
    std::vector<linalg::Matrix> gens;

    void validate() const;  // throws input_error on bad data
};

struct IrreducibilityResult {
    bool irreducible = false;
    /// A proper nonzero invariant subspace when reducible.
    std::optional<linalg::Subspace> invariant;
    /// True when every 1-dimensional seed was tried (guaranteed verdict).
    bool exhaustive = false;
};

/// Exhaustive below q^d <= 2e6 (every 1-dimensional subspace spun);
/// otherwise spins a deterministic seed set: standard basis vectors plus
/// null vectors of seeded random commutant combinations.
IrreducibilityResult is_irreducible(const Representation& rep, std::uint64_t seed = 0);

inline constexpr std::uint64_t kExhaustiveIrreducibilityBound = 2'000'000;

/**
 * The endomorphism field Delta = End(V) of an irreducible representation,
 * identified with GF(q^e): a commutant basis, a primitive matrix whose
 * powers span the commutant, and a ring isomorphism between commutant
 * matrices and elements of GF(q^e).
 */
class EndoField {
   public:
    EndoField(const Representation& rep, std::uint64_t seed = 0);

    const gf::Field& base() const { return base_; }       // F
    const gf::Field& ext() const { return ext_; }         // GF(q^e)
    std::size_t e() const { return basis_.size(); }
    const std::vector<linalg::Matrix>& basis() const { return basis_; }
    const linalg::Matrix& primitive() const { return primitive_; }
    const gf::Poly& min_poly() const { return minpoly_; }
    const gf::FieldElem& root() const { return root_; }
    const gf::Embedding& embedding() const { return embed_; }

    /// Delta-matrix -> GF(q^e) coordinate.
    gf::FieldElem to_field(const linalg::Matrix& m) const;
    /// GF(q^e) coordinate -> Delta-matrix.
    linalg::Matrix from_field(const gf::FieldElem& x) const;
    bool contains(const linalg::Matrix& m) const;

   private:
    gf::Field base_;
    gf::Field ext_;
    std::vector<linalg::Matrix> basis_;  // primitive^0 .. primitive^(e-1)
    linalg::Matrix primitive_;
    gf::Poly minpoly_;
    gf::FieldElem root_;
    gf::Embedding embed_;
    linalg::CoordSolver power_solver_;          // coordinates in primitive powers
    std::vector<gf::FieldElem> power_images_;   // root^i as ext elements
    gf::Field prime_;
    linalg::CoordSolver ext_solver_;            // prime-field coordinates in {embed(F basis)*root^i}
};

/// Basis of {M : r1_i * M = M * r2_i for each generator pair}.
std::vector<linalg::Matrix> hom_space(const Representation& r1, const Representation& r2);

/// First (canonical) nonzero intertwiner, verified invertible, or nullopt.
std::optional<linalg::Matrix> is_equivalent(const Representation& r1, const Representation& r2);

}  // namespace modind::modrep

#endif
