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

#ifndef MODIND_SERIALIZE_HPP
#define MODIND_SERIALIZE_HPP

#include <string>

#include "modind/decomp.hpp"
#include "modind/induct.hpp"

namespace modind::serialize {

/**
 * Instance files are JSON objects:
 *
 *   {
 *     "p": 2,
 *     "field": {"characteristic": 3, "degree": 1},
 *     "dim": 2,
 *     "h_gens": [[[0, 1], [-1, 0]]],
 *     "conj_gens": [[[0, -1], [1, 0]]],
 *     "a_p": [[-1, 0], [0, -1]]
 *   }
 *
 * A matrix is a list of rows; an entry is either an integer (prime subfield)
 * or a list of modulus coefficients, low degree first.  The field may carry
 * an explicit "modulus"; otherwise the canonical one for (characteristic,
 * degree) is used.  Malformed input raises input_error with a diagnostic.
 */
induct::InductionInput parse_input(const std::string& json_text);
induct::InductionInput load_input(const std::string& path);
std::string input_to_json(const induct::InductionInput& in);

/// Deterministic JSON rendering of a structure report: fixed key order,
/// canonical coefficient vectors, byte-identical across identical runs.
std::string report_to_json(const decomp::StructureReport& report);

/// Human-readable plain-text rendering of the same data.
std::string report_to_text(const decomp::StructureReport& report);

}  // namespace modind::serialize

#endif
