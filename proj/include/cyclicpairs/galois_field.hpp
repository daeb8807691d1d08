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

#ifndef CYCLICPAIRS_GALOIS_FIELD_HPP
#define CYCLICPAIRS_GALOIS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclicpairs {

/// Raised for invalid field parameters (non-prime characteristic, order too large, ...).
class FieldError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two operands live in different fields.
class FieldMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultOrderBound = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n) noexcept;

/// Prime-power decomposition q = p^m; throws FieldError if q is not a prime power.
struct PrimePower {
    std::uint32_t p;
    std::uint32_t m;
};
PrimePower prime_power(std::uint64_t q);

namespace detail {
struct FieldData;
}

class FieldElement;

/**
 * @brief The finite field GF(p^m), p^m bounded by a machine limit.
 *
 * Elements are carried as canonical integers in [0, q): the base-p digits of the integer are the
 * ascending coefficients of the representative polynomial modulo the field modulus. Field is a
 * cheap handle onto immutable shared data, so copies compare equal and can be passed across threads.
 *
 * The raw-value members (add, mul, ...) are the hot path used by polynomials and codes; they do
 * no range checking. FieldElement wraps them with field identity checks.
 */
class Field {
   public:
    using value_type = std::uint32_t;

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint64_t order() const noexcept;
    bool is_prime_field() const noexcept { return degree() == 1; }

    /// Monic modulus over GF(p), ascending coefficients, size degree() + 1.
    const std::vector<value_type>& modulus() const noexcept;

    value_type add(value_type a, value_type b) const noexcept;
    value_type sub(value_type a, value_type b) const noexcept;
    value_type neg(value_type a) const noexcept;
    value_type mul(value_type a, value_type b) const noexcept;
    /// Throws std::domain_error for a == 0.
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const;
    /// Negative exponents are allowed for nonzero a.
    value_type pow(value_type a, std::int64_t e) const;
    /// a -> a^p.
    value_type frobenius(value_type a) const;

    /// Least t >= 1 with a^t = 1; a must be nonzero.
    std::uint64_t multiplicative_order(value_type a) const;

    bool contains(std::uint64_t value) const noexcept { return value < order(); }

    FieldElement element(std::uint64_t value) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// "GF(p^m), modulus=<polynomial>"
    std::string to_string() const;

    friend bool operator==(const Field& lhs, const Field& rhs) noexcept;
    friend bool operator!=(const Field& lhs, const Field& rhs) noexcept { return !(lhs == rhs); }

   private:
    friend Field make_field(std::uint32_t p, std::uint32_t m, std::uint64_t order_bound);
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::FieldData> data_;
};

/**
 * Builds GF(p^m). The modulus is the least monic irreducible polynomial of degree m over GF(p) in
 * canonical integer order (sum of c_i p^i); for m = 1 it is x. Fields are memoized, so repeated
 * calls return handles onto the same data.
 */
Field make_field(std::uint32_t p, std::uint32_t m, std::uint64_t order_bound = kDefaultOrderBound);

/// make_field for a prime-power order q.
Field field_of_order(std::uint64_t q, std::uint64_t order_bound = kDefaultOrderBound);

class FieldElement {
   public:
    using value_type = Field::value_type;

    FieldElement(Field field, std::uint64_t value);

    const Field& field() const noexcept { return field_; }
    value_type value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator-() const { return {field_, field_.neg(value_)}; }
    FieldElement inverse() const { return {field_, field_.inv(value_)}; }
    FieldElement pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }
    FieldElement frobenius() const { return {field_, field_.frobenius(value_)}; }

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs) noexcept {
        return lhs.value_ == rhs.value_ && lhs.field_ == rhs.field_;
    }
    friend bool operator!=(const FieldElement& lhs, const FieldElement& rhs) noexcept { return !(lhs == rhs); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value_; }

   private:
    void check_same_field(const FieldElement& rhs) const;

    Field field_;
    value_type value_;
};

}  // namespace cyclicpairs

#endif
