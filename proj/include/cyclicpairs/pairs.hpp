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

#ifndef CYCLICPAIRS_PAIRS_HPP
#define CYCLICPAIRS_PAIRS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclicpairs/cyclic_code.hpp"
#include "cyclicpairs/factorization.hpp"

namespace cyclicpairs {

/// Intersection and sum of two cyclic codes of the same length over the same field.
struct PairReport {
    CyclicCode c1;
    CyclicCode c2;
    std::size_t ell = 0;      // dim(C1 ∩ C2) = n - deg lcm(g1, g2)
    std::size_t sum_dim = 0;  // dim(C1 + C2) = n - deg gcd(g1, g2)
    Polynomial intersection_generator;
    Polynomial sum_generator;
    std::optional<std::size_t> d1;
    std::optional<std::size_t> d2;
};

struct PairOptions {
    bool with_distances = false;
    DistanceOptions distance;
};

/// Argument order is free (k1 > k2 is fine). Distances are filled only when requested and within
/// the cap; an over-cap code leaves its distance empty instead of failing the analysis.
PairReport pair_analyze(const CyclicCode& c1, const CyclicCode& c2, const PairOptions& options = {});

/// dim(C ∩ C⊥)
std::size_t hull_dim(const CyclicCode& code);

struct ExistenceWitness {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::size_t ell = 0;
    bool feasible = false;
    /// Copies of each factor of the factorization, in its factor order.
    std::vector<std::uint64_t> multiplicities;
    /// prod factor^multiplicity, present iff feasible.
    std::optional<Polynomial> witness;
};

/**
 * Decides whether x^n - 1 has a monic divisor of degree ell, i.e. whether a linear ell-intersection
 * pair of cyclic codes of length n exists. Bounded subset sum over the irreducible factors (each of
 * degree e usable 0..p^nu times); among all solutions the lexicographically least multiplicity
 * vector is returned.
 */
ExistenceWitness exists_ell(std::uint64_t n, const Field& f, std::size_t ell);
ExistenceWitness exists_ell(const Factorization& fact, std::size_t ell);

enum class SmallEllReason {
    Always,          // ell = 0 or 1
    LengthEven,      // x^2 - 1 divides x^n - 1
    RepeatedRoot,    // nu >= 1, (x - 1)^2 divides x^n - 1
    QuadraticCoset,  // ord_d(q) = 2 for some d | n'
    DivisorSearch,   // none of the above; answer from exists_ell
    OutOfRange,      // ell > n
};

struct SmallEllVerdict {
    bool feasible = false;
    SmallEllReason reason = SmallEllReason::Always;
    std::string detail;
};

/// Sufficient conditions for ell in {0, 1, 2}; falls back to exists_ell when none applies.
SmallEllVerdict small_ell_predicate(std::uint64_t n, const Field& f, std::size_t ell);

}  // namespace cyclicpairs

#endif
