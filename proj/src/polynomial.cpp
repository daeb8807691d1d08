/*
   Copyright 2026 The cyclicpairs Authors

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

#include "cyclicpairs/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclicpairs/poly_text.hpp"
#include "number_theory.hpp"

namespace cyclicpairs {

Polynomial::Polynomial(Field f, std::vector<value_type> ascending) : field_(std::move(f)), coeffs_(std::move(ascending)) {
    for (auto c : coeffs_)
        if (!field_.contains(c))
            throw FieldError("coefficient " + std::to_string(c) + " is not an element of GF(" +
                             std::to_string(field_.order()) + ")");
    normalize();
}

Polynomial Polynomial::constant(const Field& f, value_type c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(const Field& f, std::size_t degree, value_type c) {
    std::vector<value_type> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(f, std::move(v));
}

Polynomial Polynomial::xn_minus_one(const Field& f, std::size_t n) {
    std::vector<value_type> v(n + 1, 0);
    v[0] = f.neg(1);
    v[n] = f.add(v[n], 1);
    return Polynomial(f, std::move(v));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t Polynomial::deg() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Polynomial::value_type Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void Polynomial::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("polynomials over different fields");
}

Polynomial Polynomial::monic() const {
    Polynomial r = *this;
    return r.scale(field_.inv(leading()));
}

Polynomial Polynomial::reciprocal() const {
    Polynomial r = *this;
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    r.normalize();
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(field_);
    std::vector<value_type> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        // i * c_i, with i reduced into the prime subfield
        value_type c = 0;
        for (std::size_t k = 0; k < i % field_.characteristic(); ++k) c = field_.add(c, coeffs_[i]);
        d[i - 1] = c;
    }
    return Polynomial(field_, std::move(d));
}

Polynomial::value_type Polynomial::eval(value_type x) const {
    value_type acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    if (x.field() != field_) throw FieldMismatch("evaluation point lies in a different field");
    return field_.element(eval(x.value()));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = field_.neg(c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::scale(value_type c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x = field_.mul(x, c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check_same_field(rhs);
    Polynomial r(lhs.field_);
    if (lhs.is_zero() || rhs.is_zero()) return r;
    const Field& f = lhs.field_;
    const auto& a = lhs.coeffs_;
    const auto& b = rhs.coeffs_;
    r.coeffs_.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r.coeffs_[i + j] = f.add(r.coeffs_[i + j], f.mul(a[i], b[j]));
    }
    r.normalize();
    return r;
}

Polynomial pow(const Polynomial& base, std::uint64_t e) {
    Polynomial result = Polynomial::constant(base.field(), 1);
    Polynomial b = base;
    while (e != 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (dividend.field() != divisor.field()) throw FieldMismatch("polynomials over different fields");
    const Field& f = dividend.field();
    const std::size_t db = divisor.deg();
    if (dividend.is_zero() || dividend.deg() < db) return {Polynomial(f), dividend};

    std::vector<Field::value_type> rem(dividend.coeffs().begin(), dividend.coeffs().end());
    std::vector<Field::value_type> quot(rem.size() - db, 0);
    const auto b = divisor.coeffs();
    const auto lead_inv = f.inv(b[db]);
    for (std::size_t i = rem.size(); i-- > db;) {
        const auto c = f.mul(rem[i], lead_inv);
        quot[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b[j]));
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
    return quot;
}

bool divides(const Polynomial& d, const Polynomial& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.field() != b.field()) throw FieldMismatch("polynomials over different fields");
        return Polynomial(a.field());
    }
    return exact_div(a * b, gcd(a, b)).monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
    Polynomial result = Polynomial::constant(base.field(), 1) % m;
    Polynomial b = base % m;
    while (e != 0) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e != 0) b = (b * b) % m;
    }
    return result;
}

bool is_irreducible(const Polynomial& f) {
    if (f.is_zero()) return false;
    const std::size_t d = f.deg();
    if (d == 0) return false;
    if (d == 1) return true;
    const Field& field = f.field();
    const Polynomial x = Polynomial::monomial(field, 1);

    std::vector<std::size_t> checkpoints;
    for (const auto& [r, e] : nt::factorize(d)) {
        (void)e;
        checkpoints.push_back(d / r);
    }
    // power = x^(Q^k) mod f, advanced one Frobenius step at a time
    Polynomial power = x % f;
    for (std::size_t k = 1; k <= d; ++k) {
        power = powmod(power, field.order(), f);
        if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
            if (!gcd(power - x, f).is_one()) return false;
        }
    }
    return (power - x).is_zero();
}

Polynomial least_irreducible(const Field& f, std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("irreducible polynomials have degree >= 1");
    if (degree == 1) return Polynomial::monomial(f, 1);
    const auto q = static_cast<Field::value_type>(f.order());
    std::vector<Field::value_type> c(degree + 1, 0);
    c[degree] = 1;
    while (true) {
        // odometer over c_0..c_{degree-1}, c_0 least significant
        std::size_t i = 0;
        while (i < degree && ++c[i] == q) c[i++] = 0;
        if (i == degree) throw std::logic_error("no irreducible polynomial found");
        if (c[0] == 0) continue;
        Polynomial candidate(f, c);
        if (is_irreducible(candidate)) return candidate;
    }
}

bool coefficient_less(const Polynomial& a, const Polynomial& b) noexcept {
    const auto ca = a.coeffs(), cb = b.coeffs();
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << format_poly(p); }

}  // namespace cyclicpairs
