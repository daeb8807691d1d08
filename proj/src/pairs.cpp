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

#include "cyclicpairs/pairs.hpp"

#include <stdexcept>
#include <string>

namespace cyclicpairs {

PairReport pair_analyze(const CyclicCode& c1, const CyclicCode& c2, const PairOptions& options) {
    if (c1.length() != c2.length()) throw CodeError("codes have different lengths");
    if (c1.field() != c2.field()) throw FieldMismatch("codes are over different fields");
    const std::size_t n = c1.length();
    auto meet = lcm(c1.generator(), c2.generator());
    auto join = gcd(c1.generator(), c2.generator());
    PairReport r{c1, c2, n - meet.deg(), n - join.deg(), std::move(meet), std::move(join), {}, {}};
    if (options.with_distances) {
        auto distance = [&](const CyclicCode& c) -> std::optional<std::size_t> {
            try {
                return min_distance(c, options.distance).d;
            } catch (const CapExceeded&) {
                return std::nullopt;
            }
        };
        r.d1 = distance(c1);
        r.d2 = distance(c2);
    }
    return r;
}

std::size_t hull_dim(const CyclicCode& code) { return pair_analyze(code, dual_code(code)).ell; }

ExistenceWitness exists_ell(std::uint64_t n, const Field& f, std::size_t ell) {
    if (ell > n) throw std::invalid_argument("ell = " + std::to_string(ell) + " exceeds n = " + std::to_string(n));
    return exists_ell(factor_xn1(n, f), ell);
}

ExistenceWitness exists_ell(const Factorization& fact, std::size_t ell) {
    if (ell > fact.n)
        throw std::invalid_argument("ell = " + std::to_string(ell) + " exceeds n = " + std::to_string(fact.n));
    ExistenceWitness w{fact.n, fact.field.order(), ell, false, {}, std::nullopt};
    const auto& factors = fact.factors;
    const std::size_t count = factors.size();

    // reach[i][v]: factors i.. can contribute total degree v
    std::vector<std::vector<char>> reach(count + 1, std::vector<char>(ell + 1, 0));
    reach[count][0] = 1;
    for (std::size_t i = count; i-- > 0;) {
        const std::size_t e = factors[i].poly.deg();
        for (std::size_t v = 0; v <= ell; ++v) {
            for (std::uint64_t s = 0; s <= factors[i].multiplicity && s * e <= v; ++s) {
                if (reach[i + 1][v - s * e]) {
                    reach[i][v] = 1;
                    break;
                }
            }
        }
    }
    if (!reach[0][ell]) return w;

    w.feasible = true;
    Polynomial witness = Polynomial::constant(fact.field, 1);
    std::size_t left = ell;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t e = factors[i].poly.deg();
        std::uint64_t s = 0;
        while (!reach[i + 1][left - s * e]) ++s;
        w.multiplicities.push_back(s);
        left -= s * e;
        witness *= pow(factors[i].poly, s);
    }
    w.witness = std::move(witness);
    return w;
}

SmallEllVerdict small_ell_predicate(std::uint64_t n, const Field& f, std::size_t ell) {
    if (ell > 2) throw std::invalid_argument("small_ell_predicate covers ell in {0, 1, 2}");
    if (ell > n) return {false, SmallEllReason::OutOfRange, "ell exceeds n"};
    if (ell < 2) return {true, SmallEllReason::Always, ell == 0 ? "witness 1" : "witness x - 1"};

    const auto split = split_length(n, f);
    if (n % 2 == 0) {
        std::string detail = "n even";
        if (split.nu >= 1) detail += " (and nu = " + std::to_string(split.nu) + ")";
        return {true, SmallEllReason::LengthEven, detail};
    }
    if (split.nu >= 1) return {true, SmallEllReason::RepeatedRoot, "nu = " + std::to_string(split.nu)};
    for (auto d : divisors_of(split.n_prime)) {
        if (mult_order(f.order(), d) == 2)
            return {true, SmallEllReason::QuadraticCoset,
                    "ord_" + std::to_string(d) + "(" + std::to_string(f.order()) + ") = 2"};
    }
    const bool feasible = exists_ell(n, f, 2).feasible;
    return {feasible, SmallEllReason::DivisorSearch, feasible ? "degree-2 divisor found" : "no degree-2 divisor"};
}

}  // namespace cyclicpairs
