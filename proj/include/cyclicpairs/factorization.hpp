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

#ifndef CYCLICPAIRS_FACTORIZATION_HPP
#define CYCLICPAIRS_FACTORIZATION_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cyclicpairs/cyclotomic.hpp"
#include "cyclicpairs/polynomial.hpp"

namespace cyclicpairs {

/// A minimal polynomial came out with coefficients outside the base field. Never expected; it
/// means the extension arithmetic or the embedding is broken.
class InternalConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// n = p^nu * n' with p not dividing n'.
struct LengthSplit {
    std::uint64_t nu = 0;
    std::uint64_t n_prime = 1;
    std::uint64_t p_power = 1;  // p^nu
};

LengthSplit split_length(std::uint64_t n, const Field& f);

struct IrreducibleFactor {
    Polynomial poly;
    std::uint64_t multiplicity = 1;  // p^nu
    std::uint64_t coset_rep = 0;
    std::uint64_t order = 1;  // additive order d of the source coset
};

/// x^n - 1 = prod factor^multiplicity, factors ordered by (d, coset representative).
struct Factorization {
    std::uint64_t n = 1;
    Field field;
    std::uint64_t nu = 0;
    std::uint64_t n_prime = 1;
    std::vector<IrreducibleFactor> factors;

    Polynomial product() const;
};

namespace detail {
class ExtensionField;
}

/**
 * @brief Minimal polynomials of the powers of a fixed primitive n'-th root of unity over GF(q).
 *
 * alpha lives in GF(q^t), t = ord_{n'}(q), realized as GF(p^(m t)) over the prime field. When
 * m > 1 and t > 1, GF(q) is embedded by sending its generator x to a root of the GF(q) modulus:
 * the least power of the first element of order q - 1 (found as for alpha) that the modulus kills.
 */
class RootOfUnityContext {
   public:
    RootOfUnityContext(std::uint64_t n_prime, Field base);
    ~RootOfUnityContext();
    RootOfUnityContext(RootOfUnityContext&&) noexcept;
    RootOfUnityContext& operator=(RootOfUnityContext&&) noexcept;

    std::uint64_t n_prime() const noexcept;
    /// t = ord_{n'}(q)
    std::size_t extension_degree() const noexcept;
    /// alpha as a polynomial over GF(p) modulo the extension modulus, ascending digits.
    std::vector<Field::value_type> alpha_digits() const;

    /// prod_{j in coset} (x - alpha^j), coerced to GF(q). Throws InternalConsistencyError if a
    /// coefficient fails the q-power Frobenius test.
    Polynomial minimal_poly(const std::vector<std::uint64_t>& coset) const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Polynomial minimal_poly(std::uint64_t n_prime, const Field& f, const std::vector<std::uint64_t>& coset);

Factorization factor_xn1(std::uint64_t n, const Field& f);

/// Deterministic primitive n-th root of unity in GF(q) for n | q - 1: beta runs over nonzero
/// elements in increasing canonical order and the first beta^((q-1)/n) of order n is returned.
Field::value_type root_of_unity(const Field& f, std::uint64_t n);

}  // namespace cyclicpairs

#endif
