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

#ifndef CYCLICPAIRS_POLYNOMIAL_HPP
#define CYCLICPAIRS_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "cyclicpairs/galois_field.hpp"

namespace cyclicpairs {

/**
 * @brief Dense univariate polynomial over a Field.
 *
 * Coefficients are canonical field values in ascending degree order with no trailing zeros, so the
 * zero polynomial has an empty coefficient vector and no degree.
 */
class Polynomial {
   public:
    using value_type = Field::value_type;

    /// The zero polynomial over f.
    explicit Polynomial(Field f) : field_(std::move(f)) {}
    /// Throws FieldError if some coefficient is not a value of f.
    Polynomial(Field f, std::vector<value_type> ascending);

    static Polynomial constant(const Field& f, value_type c);
    static Polynomial monomial(const Field& f, std::size_t degree, value_type c = 1);
    /// x^n - 1
    static Polynomial xn_minus_one(const Field& f, std::size_t n);

    const Field& field() const noexcept { return field_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    std::size_t deg() const;

    value_type coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    FieldElement coefficient(std::size_t i) const { return field_.element(coeff(i)); }
    std::span<const value_type> coeffs() const noexcept { return coeffs_; }
    /// Throws std::domain_error on zero.
    value_type leading() const;

    /// Scaled to leading coefficient 1; throws std::domain_error on zero.
    Polynomial monic() const;
    /// x^deg(f) f(1/x)
    Polynomial reciprocal() const;
    Polynomial derivative() const;

    value_type eval(value_type x) const;
    FieldElement eval(const FieldElement& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& scale(value_type c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) noexcept { return !(lhs == rhs); }

   private:
    void normalize() noexcept;
    void check_same_field(const Polynomial& rhs) const;

    Field field_;
    std::vector<value_type> coeffs_;
};

Polynomial pow(const Polynomial& base, std::uint64_t e);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Throws std::domain_error when divisor is zero.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

/// Monic gcd; gcd(0, 0) throws std::domain_error.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm; lcm(0, b) = 0.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// base^e mod m
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m);

/// Rabin's test: f of degree D over GF(Q) is irreducible iff x^(Q^D) = x mod f and
/// gcd(x^(Q^(D/r)) - x, f) = 1 for every prime r | D.
bool is_irreducible(const Polynomial& f);

/// Least monic irreducible polynomial of the given degree over f in canonical integer order
/// (coefficient c_i weighted by q^i). Degree 1 gives x.
Polynomial least_irreducible(const Field& f, std::size_t degree);

/// Total order used for deterministic tie-breaks: degree first, then coefficient vectors compared
/// lexicographically from the constant term up.
bool coefficient_less(const Polynomial& a, const Polynomial& b) noexcept;

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace cyclicpairs

#endif
