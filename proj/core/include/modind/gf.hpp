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

#ifndef MODIND_GF_HPP
#define MODIND_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modind/errors.hpp"

namespace modind::gf {

using coeff_t = std::uint32_t;

/**
 * Description of a finite field GF(p^k): the characteristic p, the extension
 * degree k, and a monic irreducible modulus polynomial over the prime field
 * (coefficients low-degree-first, length k+1).  The prime field itself uses
 * the sentinel modulus s, i.e. {0, 1}.
 */
struct FieldSpec {
    std::uint64_t characteristic = 0;
    std::size_t degree = 0;
    std::vector<coeff_t> modulus;

    bool operator==(const FieldSpec& other) const = default;
};

using Field = std::shared_ptr<const FieldSpec>;

bool same_field(const Field& a, const Field& b);

/// GF(characteristic^degree) with the lexicographically smallest monic
/// irreducible modulus (deterministic across runs).
Field mk_field(std::uint64_t characteristic, std::size_t degree);

/// Same, but with a caller-chosen modulus; validates primality, monicity and
/// irreducibility.
Field mk_field_with_modulus(std::uint64_t characteristic, std::vector<coeff_t> modulus);

/// p^k as an integer; throws if it does not fit in 64 bits.
std::uint64_t field_order(const Field& f);

class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(Field field, std::vector<coeff_t> coeffs);

    static FieldElem zero(const Field& f);
    static FieldElem one(const Field& f);
    /// Element of the prime subfield (value mod p).
    static FieldElem from_int(const Field& f, std::int64_t v);
    /// Element whose coefficient vector is the base-p digits of idx.
    static FieldElem from_index(const Field& f, std::uint64_t idx);

    const Field& field() const { return field_; }
    const std::vector<coeff_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// Integer encoding sum c_i p^i; also the canonical ordering key.
    std::uint64_t index() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;
    bool operator==(const FieldElem& other) const;
    bool operator!=(const FieldElem& other) const { return !(*this == other); }

    FieldElem inv() const;
    FieldElem pow(std::int64_t e) const;
    /// x^(p^e) where p is the characteristic; e may be any integer
    /// (reduced mod the degree, as Frobenius has order = degree).
    FieldElem frobenius(std::int64_t e) const;
    /// The unique y with y^p = x.
    FieldElem pth_root() const;

    std::string to_string() const;

   private:
    Field field_;
    std::vector<coeff_t> coeffs_;
};

/// Dense univariate polynomial over a gf field, low-degree-first.
class Poly {
   public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<FieldElem> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const FieldElem& c);
    static Poly x(const Field& f);
    static Poly from_ints(const Field& f, const std::vector<std::int64_t>& cs);

    const Field& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElem coeff(std::size_t i) const;
    FieldElem leading() const;
    bool is_monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly operator*(const FieldElem& c) const;
    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    Poly monic() const;
    Poly derivative() const;
    FieldElem eval(const FieldElem& x) const;

    std::string to_string(const std::string& var = "s") const;

   private:
    void normalize();
    Field field_;
    std::vector<FieldElem> coeffs_;  // no trailing zeros
};

/// (quotient, remainder) with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
Poly poly_pow_mod(const Poly& base, std::uint64_t e, const Poly& mod);

bool is_irreducible_poly(const Poly& f);

/// Factorization into monic irreducibles with multiplicities, times the
/// leading coefficient of the input.  Deterministic: factors sorted by degree
/// then by coefficient indices, and the internal equal-degree splitting is
/// seeded.
std::vector<std::pair<Poly, int>> factor_poly(const Poly& f, std::uint64_t seed = 0x5eed5eedULL);

/// Roots in the coefficient field, sorted by canonical element order.
std::vector<FieldElem> roots(const Poly& f);

/// Canonical generator of the multiplicative group: the element of smallest
/// index whose order is q-1.
FieldElem primitive_element(const Field& f);

/// Exhaustive discrete-log table over a fixed generator.  Desk-scale fields
/// only (|F| capped at ~2^21).
class DlogTable {
   public:
    explicit DlogTable(const Field& f);
    const FieldElem& generator() const { return gen_; }
    /// log_g(x) in [0, q-2]; x must be nonzero.
    std::uint64_t log(const FieldElem& x) const;
    FieldElem exp(std::uint64_t e) const;

   private:
    Field field_;
    FieldElem gen_;
    std::unordered_map<std::uint64_t, std::uint64_t> log_;
};

/// Field embedding GF(p^m) -> GF(p^n) for m | n, determined by the canonical
/// (smallest-index) root of the small field's modulus in the big field.
class Embedding {
   public:
    Embedding(Field from, Field to);
    const Field& from() const { return from_; }
    const Field& to() const { return to_; }
    const FieldElem& root() const { return root_; }
    FieldElem operator()(const FieldElem& x) const;

   private:
    Field from_;
    Field to_;
    FieldElem root_;
};

}  // namespace modind::gf

#endif
