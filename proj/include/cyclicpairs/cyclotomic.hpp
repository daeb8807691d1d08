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

#ifndef CYCLICPAIRS_CYCLOTOMIC_HPP
#define CYCLICPAIRS_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace cyclicpairs {

/// ord_d(q): least t >= 1 with q^t = 1 (mod d). Requires gcd(q, d) = 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t d);

/// Order of a in the additive group Z_n, i.e. n / gcd(a, n).
std::uint64_t additive_order(std::uint64_t a, std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

/// A q-cyclotomic coset of Z_{n'}; members sorted, representative is the least member.
struct Coset {
    std::vector<std::uint64_t> members;
    std::uint64_t order = 1;  // common additive order of the members

    std::uint64_t representative() const { return members.front(); }
    std::size_t size() const noexcept { return members.size(); }
};

struct CosetPartition {
    std::uint64_t n_prime = 1;
    std::uint64_t q = 2;
    std::vector<Coset> cosets;  // sorted by representative
    /// additive order d -> indices into cosets, in representative order
    std::map<std::uint64_t, std::vector<std::size_t>> by_order;
};

/// S_q(a) = {a q^i mod n'}, sorted. Requires gcd(n', q) = 1 and a < n'.
std::vector<std::uint64_t> coset_of(std::uint64_t n_prime, std::uint64_t q, std::uint64_t a);

CosetPartition coset_partition(std::uint64_t n_prime, std::uint64_t q);

/// Number of cosets from the totient formula: sum over d | n' of phi(d) / ord_d(q).
std::uint64_t coset_count(std::uint64_t n_prime, std::uint64_t q);

}  // namespace cyclicpairs

#endif
