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

#include "cyclicpairs/galois_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>

#include "cyclicpairs/poly_text.hpp"
#include "cyclicpairs/polynomial.hpp"
#include "number_theory.hpp"

namespace cyclicpairs {

namespace {

// Log tables are built up to this order; above it, arithmetic reduces representative polynomials.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
// Full addition tables for odd characteristic are only worth it for tiny fields.
constexpr std::uint64_t kAddTableLimit = 256;

}  // namespace

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::vector<Field::value_type> modulus;

    // m > 1 only
    std::optional<Polynomial> modulus_poly;
    std::vector<Field::value_type> exp;  // length 2(q-1), so exp[log a + log b] needs no reduction
    std::vector<Field::value_type> log;
    std::vector<Field::value_type> add_table;

    bool has_tables() const noexcept { return !log.empty(); }

    Polynomial to_poly(Field::value_type a) const {
        std::vector<Field::value_type> digits;
        while (a != 0) {
            digits.push_back(a % p);
            a /= p;
        }
        return Polynomial(modulus_poly->field(), std::move(digits));
    }

    Field::value_type from_poly(const Polynomial& f) const {
        std::uint64_t v = 0;
        auto c = f.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return static_cast<Field::value_type>(v);
    }

    Field::value_type digit_add(Field::value_type a, Field::value_type b) const noexcept {
        if (p == 2) return a ^ b;
        std::uint64_t r = 0, w = 1;
        while (a != 0 || b != 0) {
            r += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
            w *= p;
        }
        return static_cast<Field::value_type>(r);
    }

    Field::value_type digit_neg(Field::value_type a) const noexcept {
        if (p == 2) return a;
        std::uint64_t r = 0, w = 1;
        while (a != 0) {
            r += ((p - a % p) % p) * w;
            a /= p;
            w *= p;
        }
        return static_cast<Field::value_type>(r);
    }

    Field::value_type direct_mul(Field::value_type a, Field::value_type b) const {
        return from_poly((to_poly(a) * to_poly(b)) % *modulus_poly);
    }

    // Extended Euclid on representative polynomials: s*a + t*modulus = 1.
    Field::value_type direct_inv(Field::value_type a) const {
        Polynomial r0 = *modulus_poly, r1 = to_poly(a);
        const Field& fp = modulus_poly->field();
        Polynomial s0(fp), s1 = Polynomial::constant(fp, 1);
        while (!r1.is_zero()) {
            auto [quot, rem] = divmod(r0, r1);
            Polynomial s2 = s0 - quot * s1;
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        s0.scale(fp.inv(r0.coeff(0)));
        return from_poly(s0);
    }
};

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept { return nt::is_prime(n); }

PrimePower prime_power(std::uint64_t q) {
    if (q < 2) throw FieldError("field order must be a prime power >= 2, got " + std::to_string(q));
    const auto factors = nt::factorize(q);
    if (factors.size() != 1)
        throw FieldError("field order must be a prime power, got " + std::to_string(q));
    return {static_cast<std::uint32_t>(factors[0].first), static_cast<std::uint32_t>(factors[0].second)};
}

std::uint32_t Field::characteristic() const noexcept { return data_->p; }
std::uint32_t Field::degree() const noexcept { return data_->m; }
std::uint64_t Field::order() const noexcept { return data_->q; }
const std::vector<Field::value_type>& Field::modulus() const noexcept { return data_->modulus; }

Field::value_type Field::add(value_type a, value_type b) const noexcept {
    const auto& d = *data_;
    if (d.m == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= d.p ? s - d.p : s);
    }
    if (!d.add_table.empty()) return d.add_table[a * d.q + b];
    return d.digit_add(a, b);
}

Field::value_type Field::neg(value_type a) const noexcept {
    const auto& d = *data_;
    if (d.m == 1) return a == 0 ? 0 : d.p - a;
    return d.digit_neg(a);
}

Field::value_type Field::sub(value_type a, value_type b) const noexcept {
    if (data_->p == 2) return a ^ b;
    return add(a, neg(b));
}

Field::value_type Field::mul(value_type a, value_type b) const noexcept {
    const auto& d = *data_;
    if (d.m == 1) return static_cast<value_type>(std::uint64_t{a} * b % d.p);
    if (a == 0 || b == 0) return 0;
    if (d.has_tables()) return d.exp[d.log[a] + d.log[b]];
    return d.direct_mul(a, b);
}

Field::value_type Field::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const auto& d = *data_;
    if (d.m == 1) {
        std::int64_t r0 = d.p, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const std::int64_t quot = r0 / r1;
            r0 = std::exchange(r1, r0 - quot * r1);
            s0 = std::exchange(s1, s0 - quot * s1);
        }
        return static_cast<value_type>((s0 % d.p + d.p) % d.p);
    }
    if (d.has_tables()) return d.exp[(d.q - 1 - d.log[a]) % (d.q - 1)];
    return d.direct_inv(a);
}

Field::value_type Field::div(value_type a, value_type b) const { return mul(a, inv(b)); }

Field::value_type Field::pow(value_type a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (e == 0) return 1;
    if (a == 0) return 0;
    const auto& d = *data_;
    auto ue = static_cast<std::uint64_t>(e) % (d.q - 1);
    if (d.has_tables()) return d.exp[static_cast<std::size_t>((d.log[a] * ue) % (d.q - 1))];
    value_type result = 1;
    while (ue != 0) {
        if (ue & 1) result = mul(result, a);
        a = mul(a, a);
        ue >>= 1;
    }
    return result;
}

Field::value_type Field::frobenius(value_type a) const { return pow(a, data_->p); }

std::uint64_t Field::multiplicative_order(value_type a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t t = data_->q - 1;
    for (const auto& [r, e] : nt::factorize(data_->q - 1)) {
        (void)e;
        while (t % r == 0 && pow(a, static_cast<std::int64_t>(t / r)) == 1) t /= r;
    }
    return t;
}

FieldElement Field::element(std::uint64_t value) const { return {*this, value}; }
FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

std::string Field::to_string() const {
    std::ostringstream os;
    os << "GF(" << data_->p << "^" << data_->m << "), modulus=";
    os << format_poly(Polynomial(make_field(data_->p, 1), data_->modulus));
    return os.str();
}

bool operator==(const Field& lhs, const Field& rhs) noexcept {
    if (lhs.data_ == rhs.data_) return true;
    return lhs.data_->p == rhs.data_->p && lhs.data_->m == rhs.data_->m &&
           lhs.data_->modulus == rhs.data_->modulus;
}

namespace {

std::shared_ptr<const detail::FieldData> build_field(std::uint32_t p, std::uint32_t m, std::uint64_t q) {
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->m = m;
    data->q = q;
    if (m == 1) {
        data->modulus = {0, 1};
        return data;
    }
    const Field prime = make_field(p, 1);
    data->modulus_poly = least_irreducible(prime, m);
    data->modulus.assign(data->modulus_poly->coeffs().begin(), data->modulus_poly->coeffs().end());

    if (q <= kAddTableLimit && p != 2) {
        data->add_table.resize(q * q);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                data->add_table[a * q + b] = data->digit_add(static_cast<Field::value_type>(a),
                                                             static_cast<Field::value_type>(b));
    }

    if (q <= kTableLimit) {
        // find the least primitive element by direct arithmetic, then tabulate its powers
        const auto primes = nt::factorize(q - 1);
        auto direct_pow = [&](Field::value_type a, std::uint64_t e) {
            Field::value_type r = 1;
            while (e != 0) {
                if (e & 1) r = data->direct_mul(r, a);
                a = data->direct_mul(a, a);
                e >>= 1;
            }
            return r;
        };
        Field::value_type gen = 0;
        for (Field::value_type g = 2; g < q && gen == 0; ++g) {
            bool primitive = true;
            for (const auto& [r, e] : primes) {
                (void)e;
                if (direct_pow(g, (q - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) gen = g;
        }
        data->exp.resize(2 * (q - 1));
        data->log.assign(q, 0);
        Field::value_type x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            data->exp[i] = data->exp[i + q - 1] = x;
            data->log[x] = static_cast<Field::value_type>(i);
            x = data->direct_mul(x, gen);
        }
    }
    return data;
}

}  // namespace

Field make_field(std::uint32_t p, std::uint32_t m, std::uint64_t order_bound) {
    if (!is_prime(p)) throw FieldError("characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw FieldError("extension degree must be >= 1");
    const std::uint64_t limit = std::min<std::uint64_t>(order_bound, std::uint64_t{1} << 32);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > limit / p)
            throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(m) +
                             " exceeds the bound " + std::to_string(order_bound));
        q *= p;
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, m}); it != cache.end()) return Field(it->second);
    }
    // built outside the lock: extension fields recursively need the prime field
    auto data = build_field(p, m, q);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(std::pair{p, m}, std::move(data));
    return Field(it->second);
}

Field field_of_order(std::uint64_t q, std::uint64_t order_bound) {
    const auto [p, m] = prime_power(q);
    return make_field(p, m, order_bound);
}

FieldElement::FieldElement(Field field, std::uint64_t value) : field_(std::move(field)) {
    if (!field_.contains(value))
        throw FieldError("value " + std::to_string(value) + " is not an element of GF(" +
                         std::to_string(field_.order()) + ")");
    value_ = static_cast<value_type>(value);
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("operands belong to different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.add(value_, rhs.value_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.sub(value_, rhs.value_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.mul(value_, rhs.value_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.div(value_, rhs.value_);
    return *this;
}

}  // namespace cyclicpairs
