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

// Residue-class representation of GF(p^D) for extension degrees far beyond the bound on Field.
// Only the root-of-unity machinery uses it, so it stays out of the public headers.

#ifndef CYCLICPAIRS_EXTENSION_FIELD_HPP
#define CYCLICPAIRS_EXTENSION_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <memory>

#include "cyclicpairs/polynomial.hpp"

namespace cyclicpairs::detail {

using BigInt = boost::multiprecision::cpp_int;

class ExtensionField {
   public:
    /// Elements are polynomials over GF(p) of degree < D, reduced modulo the modulus.
    using Element = Polynomial;

    /// Memoized per (p, D). The modulus is least_irreducible(GF(p), D).
    static std::shared_ptr<const ExtensionField> get(std::uint32_t p, std::size_t degree);

    const Field& prime_field() const noexcept { return prime_; }
    std::size_t degree() const noexcept { return degree_; }
    const Polynomial& modulus() const noexcept { return modulus_; }
    const BigInt& order() const noexcept { return order_; }

    Element zero() const { return Polynomial(prime_); }
    Element one() const { return Polynomial::constant(prime_, 1); }
    /// The element whose canonical integer (base-p digits = coefficients) is index.
    Element element_at(std::uint64_t index) const;

    Element mul(const Element& a, const Element& b) const { return (a * b) % modulus_; }
    Element pow(Element base, const BigInt& e) const;
    Element pow(const Element& base, std::uint64_t e) const { return pow(base, BigInt(e)); }

    /// True iff a has multiplicative order exactly n.
    bool has_order(const Element& a, std::uint64_t n) const;

    /// First gamma = beta^((order - 1) / n), beta running over nonzero elements in canonical order,
    /// whose multiplicative order is exactly n. Requires n | order - 1.
    Element root_of_unity(std::uint64_t n) const;

   private:
    ExtensionField(std::uint32_t p, std::size_t degree);

    Field prime_;
    std::size_t degree_;
    Polynomial modulus_;
    BigInt order_;
};

}  // namespace cyclicpairs::detail

#endif
