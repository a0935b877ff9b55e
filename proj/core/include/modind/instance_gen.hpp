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

#ifndef MODIND_INSTANCE_GEN_HPP
#define MODIND_INSTANCE_GEN_HPP

#include <cstdint>

#include "modind/induct.hpp"

namespace modind::gen {

/**
 * Seeded random instance whose conjugation action has order p on the
 * endomorphism field.  H is the cyclic group GF(q^p)* acting on Delta =
 * GF(q^p) as a q-ary space by multiplication by a primitive element g, the
 * conjugate generator is multiplication by g^q (a Frobenius twist), and a^p
 * acts by a random nonzero scalar of the base field.  The whole instance is
 * then conjugated by a random invertible basis change.  Requires the base
 * characteristic to differ from p.
 */
induct::InductionInput random_instance(std::size_t p, const gf::Field& base, std::uint64_t seed);

/**
 * Seeded random instance with trivial conjugation action (inner case):
 * G = C_n with H the subgroup of index p, acting on the 1-dimensional module
 * by a random character of H over the base field.  Semisimple when the
 * characteristic differs from p and uniserial when it equals p.
 */
induct::InductionInput random_inner_instance(std::size_t p, const gf::Field& base,
                                             std::uint64_t seed);

}  // namespace modind::gen

#endif
