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

#ifndef MODIND_SKEWPOLY_HPP
#define MODIND_SKEWPOLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modind/gf.hpp"

namespace modind::skewpoly {

/**
 * Twisted polynomial ring D[t; a] over a finite field D, where the twisting
 * automorphism a is the Frobenius power x -> x^(p^twist) (p the
 * characteristic).  Multiplication follows t*c = a(c)*t.  twist = 0 recovers
 * the ordinary polynomial ring.
 */
class SkewPoly {
   public:
    SkewPoly(gf::Field field, std::size_t twist) : field_(std::move(field)), twist_(twist) {}
    SkewPoly(gf::Field field, std::size_t twist, std::vector<gf::FieldElem> coeffs);

    static SkewPoly zero(const gf::Field& f, std::size_t twist) { return SkewPoly(f, twist); }
    static SkewPoly constant(const gf::FieldElem& c, std::size_t twist);
    static SkewPoly t(const gf::Field& f, std::size_t twist);
    /// c * t^k monomial.
    static SkewPoly monomial(const gf::FieldElem& c, std::size_t k, std::size_t twist);

    const gf::Field& field() const { return field_; }
    std::size_t twist() const { return twist_; }
    const std::vector<gf::FieldElem>& coeffs() const { return coeffs_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    gf::FieldElem coeff(std::size_t i) const;
    gf::FieldElem leading() const;

    /// The twist applied i times to a coefficient (i may be negative).
    gf::FieldElem twist_apply(const gf::FieldElem& c, std::int64_t i) const;

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    SkewPoly operator-() const;
    bool operator==(const SkewPoly& other) const;
    bool operator!=(const SkewPoly& other) const { return !(*this == other); }

   private:
    void normalize();
    gf::Field field_;
    std::size_t twist_;
    std::vector<gf::FieldElem> coeffs_;
};

/// Skew product: (a t^i)(b t^j) = a * twist^i(b) * t^(i+j).
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

/// f = q*g + r with deg r < deg g.
std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& g);
/// f = g*q + r with deg r < deg g.
std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& f, const SkewPoly& g);

/// Left-twisted power: (mu t)^i = mu^{<i} t^i.  Satisfies mu^{<0} = 1 and
/// mu^{<(i+1)} = mu^{<i} * a^i(mu) = mu * a(mu^{<i}); negative exponents via
/// mu^{<-i} = (a^{-i}(mu^{<i}))^{-1}, which requires mu nonzero.
gf::FieldElem twisted_power_left(const gf::FieldElem& mu, std::int64_t i, std::size_t twist);
/// Right-twisted power: (t mu)^i = t^i mu^{i>}.
gf::FieldElem twisted_power_right(const gf::FieldElem& mu, std::int64_t i, std::size_t twist);

/**
 * Solve mu^{<p} = target where the twist automorphism has order p on the
 * field; the left-twisted p-th power is then the field norm onto the fixed
 * subfield.  Returns the canonical solution (smallest discrete log over the
 * canonical generator), or nullopt when no solution exists.  target must be
 * nonzero and fixed by the twist.
 */
std::optional<gf::FieldElem> solve_left_twisted_pth_root(const gf::FieldElem& target, std::size_t p,
                                                         std::size_t twist);
/// All solutions, sorted by discrete log.
std::vector<gf::FieldElem> enumerate_twisted_pth_roots(const gf::FieldElem& target, std::size_t p,
                                                       std::size_t twist);

/// Coefficient transport of the untwisting substitution x -> eps^{-1} y over
/// a commutative coefficient field: c_i -> c_i * eps^{-i}.
std::vector<gf::FieldElem> untwist(const std::vector<gf::FieldElem>& coeffs, const gf::FieldElem& eps);

}  // namespace modind::skewpoly

#endif
