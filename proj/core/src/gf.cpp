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

#include "modind/gf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace modind::gf {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        require_input(r <= UINT64_MAX / base, "field order does not fit in 64 bits");
        r *= base;
    }
    return r;
}

}  // namespace

bool same_field(const Field& a, const Field& b) {
    if (a.get() == b.get()) return true;
    return a && b && *a == *b;
}

std::uint64_t field_order(const Field& f) {
    return checked_pow(f->characteristic, f->degree);
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(Field field, std::vector<coeff_t> coeffs) : field_(std::move(field)) {
    const auto p = static_cast<coeff_t>(field_->characteristic);
    coeffs.resize(field_->degree, 0);
    for (auto& c : coeffs) c %= p;
    coeffs_ = std::move(coeffs);
}

FieldElem FieldElem::zero(const Field& f) {
    return FieldElem(f, std::vector<coeff_t>(f->degree, 0));
}

FieldElem FieldElem::one(const Field& f) { return from_int(f, 1); }

FieldElem FieldElem::from_int(const Field& f, std::int64_t v) {
    const auto p = static_cast<std::int64_t>(f->characteristic);
    std::vector<coeff_t> c(f->degree, 0);
    c[0] = static_cast<coeff_t>(((v % p) + p) % p);
    return FieldElem(f, std::move(c));
}

FieldElem FieldElem::from_index(const Field& f, std::uint64_t idx) {
    std::vector<coeff_t> c(f->degree, 0);
    for (std::size_t i = 0; i < f->degree; ++i) {
        c[i] = static_cast<coeff_t>(idx % f->characteristic);
        idx /= f->characteristic;
    }
    require_input(idx == 0, "element index out of range");
    return FieldElem(f, std::move(c));
}

bool FieldElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](coeff_t c) { return c == 0; });
}

std::uint64_t FieldElem::index() const {
    std::uint64_t idx = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * field_->characteristic + coeffs_[i];
    return idx;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_input(same_field(a.field_, b.field_), "field mismatch in +");
    const auto p = a.field_->characteristic;
    std::vector<coeff_t> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<coeff_t>((a.coeffs_[i] + b.coeffs_[i]) % p);
    return FieldElem(a.field_, std::move(c));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_input(same_field(a.field_, b.field_), "field mismatch in -");
    const auto p = static_cast<coeff_t>(a.field_->characteristic);
    std::vector<coeff_t> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs_[i] + p - b.coeffs_[i]) % p;
    return FieldElem(a.field_, std::move(c));
}

FieldElem FieldElem::operator-() const { return zero(field_) - *this; }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_input(same_field(a.field_, b.field_), "field mismatch in *");
    const std::uint64_t p = a.field_->characteristic;
    const std::size_t k = a.field_->degree;
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) % p;
    }
    const auto& mod = a.field_->modulus;  // monic, length k+1
    for (std::size_t i = 2 * k - 2; i + 1 > k; --i) {
        const std::uint64_t t = prod[i];
        if (t == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - mod[j] % p) * t) % p;
    }
    std::vector<coeff_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<coeff_t>(prod[i]);
    return FieldElem(a.field_, std::move(c));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

bool FieldElem::operator==(const FieldElem& other) const {
    return same_field(field_, other.field_) && coeffs_ == other.coeffs_;
}

FieldElem FieldElem::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem base = *this;
    FieldElem r = one(field_);
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

FieldElem FieldElem::inv() const {
    require_input(!is_zero(), "inversion of zero");
    const std::uint64_t q = field_order(field_);
    return pow(static_cast<std::int64_t>(q - 2));
}

FieldElem FieldElem::frobenius(std::int64_t e) const {
    const auto k = static_cast<std::int64_t>(field_->degree);
    e = ((e % k) + k) % k;
    std::uint64_t exp = 1;
    for (std::int64_t i = 0; i < e; ++i) exp *= field_->characteristic;
    return pow(static_cast<std::int64_t>(exp));
}

FieldElem FieldElem::pth_root() const {
    // Frobenius is bijective: the inverse of x -> x^p is x -> x^(p^(k-1)).
    return frobenius(static_cast<std::int64_t>(field_->degree) - 1);
}

std::string FieldElem::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

// --------------------------------------------------------------------- Poly

Poly::Poly(Field field, std::vector<FieldElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_input(same_field(c.field(), field_), "coefficient field mismatch");
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const Field& f) { return Poly(f, {FieldElem::zero(f), FieldElem::one(f)}); }

Poly Poly::from_ints(const Field& f, const std::vector<std::int64_t>& cs) {
    std::vector<FieldElem> v;
    v.reserve(cs.size());
    for (auto c : cs) v.push_back(FieldElem::from_int(f, c));
    return Poly(f, std::move(v));
}

FieldElem Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : FieldElem::zero(field_);
}

FieldElem Poly::leading() const {
    require_input(!is_zero(), "leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back() == FieldElem::one(field_); }

Poly operator+(const Poly& a, const Poly& b) {
    require_input(same_field(a.field_, b.field_), "field mismatch in poly +");
    std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<FieldElem> c(coeffs_);
    for (auto& e : c) e = -e;
    return Poly(field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_input(same_field(a.field_, b.field_), "field mismatch in poly *");
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
    std::vector<FieldElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(a.field_, std::move(c));
}

Poly Poly::operator*(const FieldElem& c) const {
    std::vector<FieldElem> v(coeffs_);
    for (auto& e : v) e = e * c;
    return Poly(field_, std::move(v));
}

bool Poly::operator==(const Poly& other) const {
    return same_field(field_, other.field_) && coeffs_ == other.coeffs_;
}

Poly Poly::monic() const {
    require_input(!is_zero(), "monic of zero polynomial");
    return *this * leading().inv();
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return zero(field_);
    std::vector<FieldElem> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * FieldElem::from_int(field_, static_cast<std::int64_t>(i)));
    return Poly(field_, std::move(c));
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem r = FieldElem::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i].to_string();
        if (i == 1)
            os << var;
        else if (i > 1)
            os << var << '^' << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_input(!b.is_zero(), "division by zero polynomial");
    require_input(same_field(a.field(), b.field()), "field mismatch in divmod");
    const auto& f = a.field();
    std::vector<FieldElem> rem(a.coeffs());
    const std::int64_t db = b.degree();
    if (a.degree() < db) return {Poly::zero(f), a};
    std::vector<FieldElem> quot(static_cast<std::size_t>(a.degree() - db) + 1, FieldElem::zero(f));
    const FieldElem lb_inv = b.leading().inv();
    for (std::int64_t i = a.degree(); i >= db; --i) {
        const auto ui = static_cast<std::size_t>(i);
        if (rem[ui].is_zero()) continue;
        const FieldElem c = rem[ui] * lb_inv;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (std::int64_t j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] =
                rem[static_cast<std::size_t>(i - db + j)] - c * b.coeff(static_cast<std::size_t>(j));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly poly_pow_mod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(FieldElem::one(base.field()));
    Poly b = poly_mod(base, mod);
    while (e) {
        if (e & 1) r = poly_mod(r * b, mod);
        b = poly_mod(b * b, mod);
        e >>= 1;
    }
    return r;
}

namespace {

/// x^(q^m) mod f, computed by iterating the q-power map.
Poly x_qpow_mod(const Poly& f, std::size_t m) {
    const std::uint64_t q = field_order(f.field());
    Poly h = Poly::x(f.field());
    for (std::size_t i = 0; i < m; ++i) h = poly_pow_mod(h, q, f);
    return h;
}

}  // namespace

bool is_irreducible_poly(const Poly& f_in) {
    require_input(!f_in.is_zero(), "irreducibility of zero polynomial");
    const Poly f = f_in.monic();
    const auto n = static_cast<std::size_t>(f.degree());
    if (n == 0) return false;
    if (n == 1) return true;
    const Poly xp = Poly::x(f.field());
    // Rabin's test: x^(q^n) = x mod f, and gcd(x^(q^(n/r)) - x, f) = 1
    // for every prime r dividing n.
    if (poly_mod(x_qpow_mod(f, n) - xp, f) != Poly::zero(f.field())) return false;
    for (std::uint64_t r : prime_divisors(n)) {
        Poly g = poly_gcd(x_qpow_mod(f, n / r) - xp, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

// ------------------------------------------------------------------- fields

Field mk_field(std::uint64_t characteristic, std::size_t degree) {
    require_input(is_prime(characteristic), "characteristic must be prime");
    require_input(degree >= 1, "degree must be at least 1");
    auto spec = std::make_shared<FieldSpec>();
    spec->characteristic = characteristic;
    spec->degree = degree;
    if (degree == 1) {
        spec->modulus = {0, 1};  // sentinel: the polynomial s
        return spec;
    }
    checked_pow(characteristic, degree);
    Field prime = mk_field(characteristic, 1);
    // Smallest monic irreducible: enumerate the low coefficients counting
    // low-degree-first in base p.
    const std::uint64_t count = checked_pow(characteristic, degree);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<coeff_t> mod(degree + 1, 0);
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < degree; ++i) {
            mod[i] = static_cast<coeff_t>(t % characteristic);
            t /= characteristic;
        }
        mod[degree] = 1;
        std::vector<FieldElem> pc;
        pc.reserve(mod.size());
        for (coeff_t c : mod) pc.push_back(FieldElem::from_int(prime, c));
        if (is_irreducible_poly(Poly(prime, std::move(pc)))) {
            spec->modulus = std::move(mod);
            return spec;
        }
    }
    throw internal_error("no irreducible polynomial found");  // unreachable
}

Field mk_field_with_modulus(std::uint64_t characteristic, std::vector<coeff_t> modulus) {
    require_input(is_prime(characteristic), "characteristic must be prime");
    require_input(modulus.size() >= 2, "modulus must have degree at least 1");
    const std::size_t degree = modulus.size() - 1;
    for (auto& c : modulus) c %= static_cast<coeff_t>(characteristic);
    require_input(modulus.back() == 1, "modulus must be monic");
    auto spec = std::make_shared<FieldSpec>();
    spec->characteristic = characteristic;
    spec->degree = degree;
    spec->modulus = modulus;
    if (degree == 1) {
        require_input(modulus[0] == 0, "prime field sentinel modulus must be s");
        return spec;
    }
    Field prime = mk_field(characteristic, 1);
    std::vector<FieldElem> pc;
    for (coeff_t c : modulus) pc.push_back(FieldElem::from_int(prime, c));
    require_input(is_irreducible_poly(Poly(prime, std::move(pc))), "modulus is reducible");
    return spec;
}

// ------------------------------------------------------------ factorization

namespace {

/// f = g^p with g obtained by taking p-th roots of the coefficients at
/// indices divisible by p.
Poly poly_pth_root(const Poly& f) {
    const auto p = static_cast<std::size_t>(f.field()->characteristic);
    std::vector<FieldElem> c;
    for (std::size_t i = 0; i * p <= static_cast<std::size_t>(f.degree()); ++i) c.push_back(f.coeff(i * p).pth_root());
    return Poly(f.field(), std::move(c));
}

Poly random_poly_below(const Field& f, std::size_t deg_bound, std::mt19937_64& rng) {
    std::vector<FieldElem> c;
    c.reserve(deg_bound);
    const std::uint64_t q = field_order(f);
    for (std::size_t i = 0; i < deg_bound; ++i) c.push_back(FieldElem::from_index(f, rng() % q));
    return Poly(f, std::move(c));
}

/// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product of
/// irreducibles all of degree d.
void equal_degree_split(const Poly& f, std::size_t d, std::vector<Poly>& out, std::mt19937_64& rng) {
    const auto n = static_cast<std::size_t>(f.degree());
    if (n == d) {
        out.push_back(f);
        return;
    }
    const Field& F = f.field();
    const std::uint64_t q = field_order(F);
    Poly g = Poly::zero(F);
    while (true) {
        Poly a = random_poly_below(F, n, rng);
        if (a.degree() < 1) continue;
        if (F->characteristic == 2) {
            // Trace map over GF(2^(k*d)).
            Poly t = poly_mod(a, f);
            Poly acc = t;
            const std::size_t bits = F->degree * d;
            for (std::size_t i = 1; i < bits; ++i) {
                t = poly_mod(t * t, f);
                acc = acc + t;
            }
            g = poly_gcd(acc, f);
        } else {
            // a^((q^d-1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2), avoiding the
            // possibly huge exponent q^d.
            Poly c = poly_mod(a, f);
            Poly t = c;
            for (std::size_t i = 1; i < d; ++i) {
                t = poly_pow_mod(t, q, f);
                c = poly_mod(c * t, f);
            }
            Poly b = poly_pow_mod(c, (q - 1) / 2, f);
            g = poly_gcd(b - Poly::constant(FieldElem::one(F)), f);
        }
        const auto dg = g.degree();
        if (dg > 0 && dg < f.degree()) break;
    }
    equal_degree_split(g, d, out, rng);
    equal_degree_split(divmod(f, g).first, d, out, rng);
}

/// Irreducible factors (multiplicity 1 each) of a monic squarefree poly.
std::vector<Poly> factor_squarefree(Poly f, std::mt19937_64& rng) {
    std::vector<Poly> out;
    const std::uint64_t q = field_order(f.field());
    const Poly xp = Poly::x(f.field());
    Poly h = xp;
    std::size_t d = 0;
    while (f.degree() > 0) {
        ++d;
        if (static_cast<std::int64_t>(2 * d) > f.degree()) {
            out.push_back(f.monic());
            break;
        }
        h = poly_pow_mod(h, q, f);
        Poly g = poly_gcd(h - xp, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, out, rng);
            f = divmod(f, g).first;
            h = poly_mod(h, f);
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_poly(const Poly& f_in, std::uint64_t seed) {
    require_input(!f_in.is_zero(), "cannot factor the zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, int>> result;
    Poly f = f_in.monic();
    const auto p = static_cast<int>(f.field()->characteristic);

    int power = 1;  // current factors carry multiplicity `power` in f_in
    while (f.degree() > 0) {
        Poly fp = f.derivative();
        if (fp.is_zero()) {
            f = poly_pth_root(f);
            power *= p;
            continue;
        }
        // Squarefree part containing every irreducible factor whose
        // multiplicity is not divisible by p; divide each out fully.
        Poly w = divmod(f, poly_gcd(f, fp)).first;
        for (const Poly& h : factor_squarefree(w, rng)) {
            int m = 0;
            while (true) {
                auto [q, r] = divmod(f, h);
                if (!r.is_zero()) break;
                f = q;
                ++m;
            }
            result.emplace_back(h, m * power);
        }
        // What remains has all multiplicities divisible by p.
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& ca = a.first.coeffs();
        const auto& cb = b.first.coeffs();
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (ca[i].index() != cb[i].index()) return ca[i].index() < cb[i].index();
        }
        return false;
    });
    return result;
}

std::vector<FieldElem> roots(const Poly& f) {
    std::vector<FieldElem> rs;
    for (const auto& [g, m] : factor_poly(f)) {
        if (g.degree() == 1) rs.push_back(-g.coeff(0));
    }
    std::sort(rs.begin(), rs.end(), [](const FieldElem& a, const FieldElem& b) { return a.index() < b.index(); });
    return rs;
}

FieldElem primitive_element(const Field& f) {
    const std::uint64_t q = field_order(f);
    const auto ps = prime_divisors(q - 1);
    for (std::uint64_t idx = 2; idx < q; ++idx) {
        FieldElem x = FieldElem::from_index(f, idx);
        bool ok = true;
        for (std::uint64_t r : ps) {
            if (x.pow(static_cast<std::int64_t>((q - 1) / r)) == FieldElem::one(f)) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    // q = 2: the only nonzero element generates the trivial group.
    return FieldElem::one(f);
}

DlogTable::DlogTable(const Field& f) : field_(f), gen_(primitive_element(f)) {
    const std::uint64_t q = field_order(f);
    require_input(q <= (1ULL << 21), "field too large for exhaustive discrete log table");
    FieldElem x = FieldElem::one(f);
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
        log_.emplace(x.index(), e);
        x = x * gen_;
    }
}

std::uint64_t DlogTable::log(const FieldElem& x) const {
    require_input(!x.is_zero(), "discrete log of zero");
    auto it = log_.find(x.index());
    require_internal(it != log_.end(), "element missing from dlog table");
    return it->second;
}

FieldElem DlogTable::exp(std::uint64_t e) const { return gen_.pow(static_cast<std::int64_t>(e % (field_order(field_) - 1))); }

Embedding::Embedding(Field from, Field to)
    : from_(std::move(from)), to_(std::move(to)), root_(FieldElem::zero(to_)) {
    require_input(from_->characteristic == to_->characteristic, "embedding requires equal characteristic");
    require_input(to_->degree % from_->degree == 0, "embedding requires subfield degree dividing");
    if (from_->degree == 1) return;  // prime subfield: root of sentinel s is 0
    std::vector<FieldElem> mc;
    for (coeff_t c : from_->modulus) mc.push_back(FieldElem::from_int(to_, c));
    auto rs = roots(Poly(to_, std::move(mc)));
    require_internal(!rs.empty(), "modulus has no root in extension field");
    root_ = rs.front();  // canonical: smallest index
}

FieldElem Embedding::operator()(const FieldElem& x) const {
    require_input(same_field(x.field(), from_), "embedding applied to wrong field");
    FieldElem r = FieldElem::zero(to_);
    // Horner in the image of the small field's generator.
    for (std::size_t i = x.coeffs().size(); i-- > 0;)
        r = r * root_ + FieldElem::from_int(to_, x.coeffs()[i]);
    return r;
}

}  // namespace modind::gf
