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

#include "modind/skewpoly.hpp"

#include <algorithm>
#include <numeric>

namespace modind::skewpoly {

using gf::FieldElem;

SkewPoly::SkewPoly(gf::Field field, std::size_t twist, std::vector<gf::FieldElem> coeffs)
    : field_(std::move(field)), twist_(twist), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_input(gf::same_field(c.field(), field_), "coefficient field mismatch");
    normalize();
}

void SkewPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::constant(const gf::FieldElem& c, std::size_t twist) {
    return SkewPoly(c.field(), twist, {c});
}

SkewPoly SkewPoly::t(const gf::Field& f, std::size_t twist) {
    return SkewPoly(f, twist, {FieldElem::zero(f), FieldElem::one(f)});
}

SkewPoly SkewPoly::monomial(const gf::FieldElem& c, std::size_t k, std::size_t twist) {
    std::vector<FieldElem> v(k + 1, FieldElem::zero(c.field()));
    v[k] = c;
    return SkewPoly(c.field(), twist, std::move(v));
}

FieldElem SkewPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : FieldElem::zero(field_);
}

FieldElem SkewPoly::leading() const {
    require_input(!is_zero(), "leading coefficient of zero skew polynomial");
    return coeffs_.back();
}

FieldElem SkewPoly::twist_apply(const gf::FieldElem& c, std::int64_t i) const {
    return c.frobenius(static_cast<std::int64_t>(twist_) * i);
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_input(gf::same_field(a.field_, b.field_) && a.twist_ == b.twist_, "skew ring mismatch in +");
    std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return SkewPoly(a.field_, a.twist_, std::move(c));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly SkewPoly::operator-() const {
    std::vector<FieldElem> c(coeffs_);
    for (auto& e : c) e = -e;
    return SkewPoly(field_, twist_, std::move(c));
}

bool SkewPoly::operator==(const SkewPoly& other) const {
    return gf::same_field(field_, other.field_) && twist_ == other.twist_ && coeffs_ == other.coeffs_;
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_input(gf::same_field(f.field(), g.field()) && f.twist() == g.twist(), "skew ring mismatch in *");
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.field(), f.twist());
    std::vector<FieldElem> c(f.coeffs().size() + g.coeffs().size() - 1, FieldElem::zero(f.field()));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            // (a t^i)(b t^j) = a * a^i(b) t^(i+j)
            c[i + j] = c[i + j] + f.coeffs()[i] * f.twist_apply(g.coeffs()[j], static_cast<std::int64_t>(i));
        }
    }
    return SkewPoly(f.field(), f.twist(), std::move(c));
}

std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_input(!g.is_zero(), "skew division by zero");
    require_input(gf::same_field(f.field(), g.field()) && f.twist() == g.twist(), "skew ring mismatch in divmod");
    SkewPoly r = f;
    SkewPoly q = SkewPoly::zero(f.field(), f.twist());
    const std::int64_t dg = g.degree();
    while (r.degree() >= dg) {
        const std::int64_t k = r.degree() - dg;
        // (c t^k) * g has leading coefficient c * a^k(lead g).
        const FieldElem c = r.leading() / r.twist_apply(g.leading(), k);
        SkewPoly m = SkewPoly::monomial(c, static_cast<std::size_t>(k), f.twist());
        q = q + m;
        r = r - skew_mul(m, g);
    }
    return {q, r};
}

std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_input(!g.is_zero(), "skew division by zero");
    require_input(gf::same_field(f.field(), g.field()) && f.twist() == g.twist(), "skew ring mismatch in divmod");
    SkewPoly r = f;
    SkewPoly q = SkewPoly::zero(f.field(), f.twist());
    const std::int64_t dg = g.degree();
    while (r.degree() >= dg) {
        const std::int64_t k = r.degree() - dg;
        // g * (c t^k) has leading coefficient lead(g) * a^dg(c).
        const FieldElem c = r.twist_apply(g.leading().inv() * r.leading(), -dg);
        SkewPoly m = SkewPoly::monomial(c, static_cast<std::size_t>(k), f.twist());
        q = q + m;
        r = r - skew_mul(g, m);
    }
    return {q, r};
}

FieldElem twisted_power_left(const gf::FieldElem& mu, std::int64_t i, std::size_t twist) {
    const gf::Field& f = mu.field();
    if (i < 0) {
        require_input(!mu.is_zero(), "negative twisted power of zero");
        // mu^{<i} a^i(mu^{<-i}) = mu^{<0} = 1 with i < 0.
        const FieldElem pos = twisted_power_left(mu, -i, twist);
        return pos.frobenius(static_cast<std::int64_t>(twist) * i).inv();
    }
    FieldElem r = FieldElem::one(f);
    for (std::int64_t k = 0; k < i; ++k)
        r = r * mu.frobenius(static_cast<std::int64_t>(twist) * k);
    return r;
}

FieldElem twisted_power_right(const gf::FieldElem& mu, std::int64_t i, std::size_t twist) {
    const gf::Field& f = mu.field();
    if (i < 0) {
        require_input(!mu.is_zero(), "negative twisted power of zero");
        const FieldElem pos = twisted_power_right(mu, -i, twist);
        return pos.frobenius(static_cast<std::int64_t>(twist) * (-i)).inv();
    }
    FieldElem r = FieldElem::one(f);
    for (std::int64_t k = 0; k < i; ++k)
        r = r.frobenius(-static_cast<std::int64_t>(twist)) * mu;
    return r;
}

namespace {

struct NormEquation {
    std::uint64_t order;    // |F*| = q - 1
    std::uint64_t norm;     // norm exponent mod order
    std::uint64_t target;   // dlog of the target
    gf::DlogTable table;
};

NormEquation setup_norm_equation(const gf::FieldElem& target, std::size_t p, std::size_t twist) {
    require_input(!target.is_zero(), "twisted root of zero");
    require_input(target.frobenius(static_cast<std::int64_t>(twist)) == target,
                  "target not fixed by the twist automorphism");
    const gf::Field& f = target.field();
    const std::uint64_t q0 = f->characteristic;
    // mu^{<p} = mu^(1 + q0^t + ... + q0^(t(p-1))) for nonzero mu.
    const std::uint64_t order = gf::field_order(f) - 1;
    std::uint64_t norm = 0, qe = 1;
    for (std::size_t i = 0; i < p; ++i) {
        norm = (norm + qe) % order;
        std::uint64_t step = 1;
        for (std::size_t j = 0; j < twist; ++j) step = step * (q0 % order) % order;
        qe = qe * step % order;
    }
    gf::DlogTable table(f);
    return {order, norm, table.log(target), std::move(table)};
}

}  // namespace

std::optional<gf::FieldElem> solve_left_twisted_pth_root(const gf::FieldElem& target, std::size_t p,
                                                         std::size_t twist) {
    NormEquation eq = setup_norm_equation(target, p, twist);
    const std::uint64_t d = std::gcd(eq.norm, eq.order);
    if (eq.target % d != 0) return std::nullopt;
    // Solve norm * x = target (mod order): reduce by d and invert.
    const std::uint64_t m = eq.order / d;
    std::uint64_t a = (eq.norm / d) % m, b = (eq.target / d) % m;
    // Modular inverse by extended Euclid.
    std::int64_t t0 = 0, t1 = 1;
    std::uint64_t r0 = m, r1 = a;
    while (r1) {
        const std::uint64_t qt = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - static_cast<std::int64_t>(qt) * t1);
    }
    require_internal(r0 == 1 || m == 1, "gcd reduction failed in norm solver");
    const std::uint64_t inv = m == 1 ? 0 : static_cast<std::uint64_t>(((t0 % static_cast<std::int64_t>(m)) +
                                                                       static_cast<std::int64_t>(m)) %
                                                                      static_cast<std::int64_t>(m));
    const std::uint64_t x0 = m == 1 ? 0 : (static_cast<__uint128_t>(b) * inv) % m;
    return eq.table.exp(x0);
}

std::vector<gf::FieldElem> enumerate_twisted_pth_roots(const gf::FieldElem& target, std::size_t p,
                                                       std::size_t twist) {
    auto canonical = solve_left_twisted_pth_root(target, p, twist);
    if (!canonical) return {};
    NormEquation eq = setup_norm_equation(target, p, twist);
    const std::uint64_t d = std::gcd(eq.norm, eq.order);
    const std::uint64_t x0 = eq.table.log(*canonical);
    std::vector<std::uint64_t> exps;
    exps.reserve(d);
    for (std::uint64_t j = 0; j < d; ++j) exps.push_back((x0 + j * (eq.order / d)) % eq.order);
    std::sort(exps.begin(), exps.end());
    std::vector<gf::FieldElem> out;
    out.reserve(d);
    for (auto e : exps) out.push_back(eq.table.exp(e));
    return out;
}

std::vector<gf::FieldElem> untwist(const std::vector<gf::FieldElem>& coeffs, const gf::FieldElem& eps) {
    require_input(!eps.is_zero(), "untwist by zero");
    std::vector<gf::FieldElem> out;
    out.reserve(coeffs.size());
    const FieldElem inv = eps.inv();
    FieldElem scale = FieldElem::one(eps.field());
    for (const auto& c : coeffs) {
        out.push_back(c * scale);
        scale = scale * inv;
    }
    return out;
}

}  // namespace modind::skewpoly
