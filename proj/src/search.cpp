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

#include "cyclicpairs/search.hpp"

#include <algorithm>

namespace cyclicpairs {

std::vector<Polynomial> divisors_of_xn1(const Factorization& fact) {
    const auto& factors = fact.factors;
    std::vector<std::uint64_t> mult(factors.size(), 0);
    std::vector<Polynomial> out;
    while (true) {
        Polynomial d = Polynomial::constant(fact.field, 1);
        for (std::size_t i = 0; i < factors.size(); ++i) d *= pow(factors[i].poly, mult[i]);
        out.push_back(std::move(d));
        std::size_t i = factors.size();
        while (i > 0) {
            --i;
            if (mult[i] < factors[i].multiplicity) {
                ++mult[i];
                break;
            }
            mult[i] = 0;
            if (i == 0) return out;
        }
        if (factors.empty()) return out;
    }
}

SearchResult search_pairs(std::uint64_t n, const Field& f, const SearchOptions& options) {
    SearchResult result;
    const auto fact = factor_xn1(n, f);
    if (options.ell > n) {
        result.reason = "infeasible";
        return result;
    }
    if (!exists_ell(fact, options.ell).feasible) {
        result.reason = "infeasible";
        return result;
    }
    result.feasible = true;

    struct Candidate {
        CyclicCode code;
        std::optional<std::size_t> d;
    };
    std::vector<Candidate> candidates;
    for (auto& g : divisors_of_xn1(fact)) {
        if (g.deg() == n) continue;  // zero code
        auto code = make_code(n, f, g);
        std::optional<std::size_t> d;
        try {
            d = min_distance(code, options.distance).d;
        } catch (const CapExceeded&) {
            ++result.skipped_over_cap;
            continue;
        }
        candidates.push_back({std::move(code), d});
    }

    std::vector<PairReport> matches;
    for (const auto& a : candidates) {
        if (*a.d < options.min_d1) continue;
        for (const auto& b : candidates) {
            if (*b.d < options.min_d2) continue;
            const auto meet = lcm(a.code.generator(), b.code.generator());
            if (n - meet.deg() != options.ell) continue;
            auto report = pair_analyze(a.code, b.code);
            report.d1 = a.d;
            report.d2 = b.d;
            matches.push_back(std::move(report));
        }
    }
    std::sort(matches.begin(), matches.end(), [](const PairReport& x, const PairReport& y) {
        const auto sx = *x.d1 + *x.d2, sy = *y.d1 + *y.d2;
        if (sx != sy) return sx > sy;
        const auto px = *x.d1 * *x.d2, py = *y.d1 * *y.d2;
        if (px != py) return px > py;
        if (x.c1.generator() != y.c1.generator()) return coefficient_less(x.c1.generator(), y.c1.generator());
        return coefficient_less(x.c2.generator(), y.c2.generator());
    });
    result.matched = matches.size();
    if (matches.size() > options.limit) matches.erase(matches.begin() + static_cast<std::ptrdiff_t>(options.limit), matches.end());
    result.pairs = std::move(matches);
    result.reason = "feasible";
    return result;
}

}  // namespace cyclicpairs
