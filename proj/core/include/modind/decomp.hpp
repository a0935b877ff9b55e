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

#ifndef MODIND_DECOMP_HPP
#define MODIND_DECOMP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modind/induct.hpp"

namespace modind::decomp {

enum class CaseTag {
    NonStable,             // module not G-stable: induced module irreducible
    StableOrderP,          // alpha acts on Delta with order p: p isomorphic summands
    StableInnerSemisimple, // alpha trivial on Delta, char != p: Wedderburn components
    StableInnerUniserial,  // alpha trivial on Delta, char = p: unique composition series
};

std::string to_string(CaseTag tag);

/// Endomorphism field of a submodule: |End| = field_size, with an explicit
/// matrix basis on the submodule's own coordinate space.
struct EndoDesc {
    std::uint64_t field_size = 0;
    std::vector<linalg::Matrix> basis;
};

/**
 * A submodule of the induced module with an explicit construction basis.
 * `rows` are the basis vectors produced by the structure theory (not row
 * reduced); rep_on is the representation afforded relative to those rows,
 * generators ordered [a, h_1, ..., h_r] like the induced representation.
 * `basis` is the canonical (row reduced) form of the same subspace.
 */
struct Submodule {
    linalg::Matrix rows;
    linalg::Subspace basis;
    modrep::Representation rep_on;
    EndoDesc endo;

    Submodule() : rows(gf::Field(), 0, 0), basis(gf::Field(), 0) {}
};

/// Exhaustive submodule lattice: spin every 1-dimensional subspace, close
/// under sums.  Subspaces are sorted canonically; cover_edges are Hasse
/// relations (indices a < b with basis[a] covered by basis[b]).
struct LatticeResult {
    std::vector<linalg::Subspace> subspaces;
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
};

/// Guarded by q^dim <= limit (throws input_error beyond it).
LatticeResult brute_force_lattice(const modrep::Representation& rep,
                                  std::uint64_t limit = 2000000);

enum class OracleMode {
    Off,      // never run the brute-force comparison
    InRange,  // run it when q^dim is within the limit, skip silently otherwise
    Require,  // input_error when q^dim exceeds the limit
};

struct Options {
    std::uint64_t seed = 0;
    bool deep_verify = false;
    std::uint64_t oracle_limit = 2000000;
    OracleMode oracle = OracleMode::InRange;
};

struct StructureReport {
    CaseTag tag = CaseTag::NonStable;
    std::size_t p = 0;
    std::size_t d = 0;  // dim of the input module; induced dim is p*d
    modrep::Representation induced;  // generators [a, h_1, ..., h_r]
    std::optional<induct::StableData> stable;
    std::optional<gf::FieldElem> eta;  // inner case, Delta coordinates
    std::optional<gf::FieldElem> xi;   // uniserial case, xi^p = eta
    std::vector<gf::Poly> factors;     // monic irreducible factors of s^p - eta
    std::vector<Submodule> summands;   // direct-sum cases
    std::vector<std::vector<std::size_t>> iso_classes;  // summand indices
    std::vector<Submodule> series;     // ascending chain W_1 ... W_p
    induct::CheckList checks;
    bool oracle_ran = false;

    bool all_ok() const;
};

/// Main driver: route on stability and the order of alpha on Delta, build
/// the submodule structure, and run every verification check.
StructureReport decompose(const induct::InductionInput& in, const Options& opt = {});

/// Order-p case: the p isomorphic irreducible summands U(mu_j) built from
/// solutions of the twisted norm equation mu^{<p} = lambda^-1.
std::vector<Submodule> order_p_summands(const induct::InductionInput& in,
                                          const induct::StableData& sd,
                                          const modrep::Representation& induced);

/// Inner case: the submodule attached to a monic factor mu of s^p - eta with
/// cofactor nu (mu * nu = s^p - eta over Delta).
Submodule w_submodule(const gf::Poly& mu, const gf::Poly& nu, const induct::InductionInput& in,
                      const induct::StableData& sd, const modrep::Representation& induced);

/// Uniserial case (char = p): the binomial-formula chain W_1 c ... c W_p,
/// with quotient and matrix-identity checks appended to `checks`.
std::vector<Submodule> uniserial_series(const gf::FieldElem& xi, const induct::InductionInput& in,
                                        const induct::StableData& sd,
                                        const modrep::Representation& induced,
                                        induct::CheckList& checks);

/// Re-run every structural invariant of the report and (subject to opt)
/// compare against the brute-force lattice.  Appends to report.checks.
void verify_report(StructureReport& report, const Options& opt);

/// Gaussian binomial [m k] over a field of the given size (number of
/// k-dimensional subspaces of an m-dimensional space).
std::uint64_t gaussian_binomial(std::size_t m, std::size_t k, std::uint64_t field_size);

}  // namespace modind::decomp

#endif
