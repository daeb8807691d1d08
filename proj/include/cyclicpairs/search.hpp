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

#ifndef CYCLICPAIRS_SEARCH_HPP
#define CYCLICPAIRS_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclicpairs/pairs.hpp"

namespace cyclicpairs {

/// All monic divisors of x^n - 1, walking the multiplicity lattice of the factorization with the
/// first factor most significant.
std::vector<Polynomial> divisors_of_xn1(const Factorization& fact);

struct SearchOptions {
    std::size_t ell = 0;
    std::size_t min_d1 = 1;
    std::size_t min_d2 = 1;
    std::size_t limit = 20;
    DistanceOptions distance;
};

struct SearchResult {
    bool feasible = false;
    std::string reason;
    /// Best first: (d1 + d2, d1 d2) descending, then (g1, g2) by coefficient_less.
    std::vector<PairReport> pairs;
    std::size_t matched = 0;         // pairs meeting all criteria before truncation to limit
    std::size_t skipped_over_cap = 0;  // divisors whose distance exceeded the enumeration cap
};

/**
 * Ordered pairs (g1, g2) of divisors of x^n - 1 with intersection dimension ell and distances at
 * least the thresholds. The zero code is never a candidate. An infeasible ell yields an empty,
 * non-failing result.
 */
SearchResult search_pairs(std::uint64_t n, const Field& f, const SearchOptions& options);

}  // namespace cyclicpairs

#endif
