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

#ifndef CYCLICPAIRS_CONSTRUCTIONS_HPP
#define CYCLICPAIRS_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclicpairs/pairs.hpp"

namespace cyclicpairs {

/// Which precondition of a construction failed.
enum class ChainLink {
    NotMonic,
    LengthNotCoprime,    // p | n' for the repeated-root form
    LDividesXn1,         // L | x^n - 1
    G1DividesCofactor,   // g1 | (x^n - 1) / L
    G2DividesG1,         // g2 | g1 (g2 | g1^(p^nu) for the repeated-root form)
    SOutOfRange,         // 0 <= s <= p^nu
    NoQuadraticFactor,   // no irreducible quadratic factor of x^n' - 1
    LengthOdd,           // x^2 - 1 needs n' even
    MdsLength,           // n | q - 1
    MdsBounds,           // 0 <= ell <= k1 <= k2 <= n, k1 + k2 - ell <= n
};

std::string to_string(ChainLink link);

class ConstructionError : public std::invalid_argument {
   public:
    ConstructionError(ChainLink link, const std::string& what)
        : std::invalid_argument(to_string(link) + ": " + what), link_(link) {}
    ChainLink link() const noexcept { return link_; }

   private:
    ChainLink link_;
};

struct ConstructionResult {
    CyclicCode c1;
    CyclicCode c2;
    std::size_t target_ell = 0;
    /// Inclusive range the construction guarantees for dim(C1 ∩ C2).
    std::size_t lo = 0;
    std::size_t hi = 0;
    /// The gcd condition holds, so measured_ell = target_ell is certified.
    bool exact = false;
    std::size_t measured_ell = 0;
    /// Root of unity used by the MDS construction.
    std::optional<Field::value_type> alpha;
    std::optional<std::size_t> d1;
    std::optional<std::size_t> d2;
};

/**
 * L | x^n - 1 of degree ell and g2 | g1 | (x^n - 1) / L, all monic. C1 is generated by g1 and C2 by
 * k(x) = g2 (x^n - 1) / (L g1). The intersection dimension lies in [ell, ell + deg g1], and equals
 * ell when gcd(g1, (x^n - 1) / (L g1)) = 1. Preconditions are checked in that chain order.
 */
ConstructionResult construct_L(std::uint64_t n, const Field& f, const Polynomial& L, const Polynomial& g1,
                               const Polynomial& g2);

/**
 * Repeated-root form with n = p^nu n': L | x^n' - 1 of degree ell, g1 | (x^n' - 1) / L,
 * g2 | g1^(p^nu), 0 <= s <= p^nu. C1 is generated by g1^(p^nu) and C2 by
 * g2 (x^n - 1) / (L^s g1^(p^nu)); the pair meets in dimension ell * s.
 */
ConstructionResult construct_repeated(std::uint64_t n_prime, std::uint64_t nu, const Field& f, const Polynomial& L,
                                      const Polynomial& g1, const Polynomial& g2, std::uint64_t s);

/// L = 1: a 0-intersection pair (s is irrelevant and fixed to 1).
ConstructionResult construct_zero_intersection(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                               const Polynomial& g1, const Polynomial& g2);
/// L = x - 1: an s-intersection pair.
ConstructionResult construct_linear_intersection(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                                 const Polynomial& g1, const Polynomial& g2, std::uint64_t s);
/// L = x^2 - 1 (n' even): a 2s-intersection pair.
ConstructionResult construct_even_quadratic(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                            const Polynomial& g1, const Polynomial& g2, std::uint64_t s);
/// L = the first irreducible quadratic factor of x^n' - 1 (exists when ord_d(q) = 2 for some d | n').
ConstructionResult construct_irreducible_quadratic(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                                   const Polynomial& g1, const Polynomial& g2, std::uint64_t s);

/// The quadratic factor used by construct_irreducible_quadratic, if any.
std::optional<Polynomial> first_quadratic_factor(std::uint64_t n_prime, const Field& f);

/**
 * Reed-Solomon pair for n | q - 1: with alpha a primitive n-th root of unity,
 * g1 = prod_{i=0}^{n-k1-1} (x - alpha^i) and g2 = prod_{i=k2-ell}^{n-ell-1} (x - alpha^i).
 * Both codes are MDS; distances are computed when distance options allow it (cap permitting).
 */
ConstructionResult construct_mds(const Field& f, std::uint64_t n, std::size_t k1, std::size_t k2, std::size_t ell,
                                 const std::optional<DistanceOptions>& distances = std::nullopt);

}  // namespace cyclicpairs

#endif
