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

#include "cyclicpairs/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "number_theory.hpp"

namespace cyclicpairs {

namespace {

void require_coprime(std::uint64_t n_prime, std::uint64_t q) {
    if (n_prime == 0) throw std::invalid_argument("modulus must be positive");
    if (std::gcd(n_prime, q) != 1)
        throw std::invalid_argument("gcd(" + std::to_string(n_prime) + ", " + std::to_string(q) + ") != 1");
}

}  // namespace

std::uint64_t mult_order(std::uint64_t q, std::uint64_t d) {
    require_coprime(d, q);
    if (d == 1) return 1;
    // ord_d(q) divides phi(d) < d, so d iterations always suffice
    std::uint64_t x = q % d;
    for (std::uint64_t t = 1; t <= d; ++t) {
        if (x == 1) return t;
        x = x * (q % d) % d;
    }
    throw std::logic_error("multiplicative order not found");
}

std::uint64_t additive_order(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    return n / std::gcd(a % n, n);
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi(0) is undefined");
    return nt::euler_phi(n);
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) { return nt::divisors(n); }

std::vector<std::uint64_t> coset_of(std::uint64_t n_prime, std::uint64_t q, std::uint64_t a) {
    require_coprime(n_prime, q);
    if (a >= n_prime)
        throw std::invalid_argument("residue " + std::to_string(a) + " out of range for Z_" + std::to_string(n_prime));
    std::vector<std::uint64_t> members{a};
    const std::uint64_t qm = q % n_prime;
    for (std::uint64_t x = a * qm % n_prime; x != a; x = x * qm % n_prime) members.push_back(x);
    std::sort(members.begin(), members.end());
    return members;
}

CosetPartition coset_partition(std::uint64_t n_prime, std::uint64_t q) {
    require_coprime(n_prime, q);
    CosetPartition part;
    part.n_prime = n_prime;
    part.q = q;
    std::vector<bool> seen(n_prime, false);
    for (std::uint64_t a = 0; a < n_prime; ++a) {
        if (seen[a]) continue;
        Coset c;
        c.members = coset_of(n_prime, q, a);
        c.order = additive_order(a, n_prime);
        for (auto m : c.members) seen[m] = true;
        part.by_order[c.order].push_back(part.cosets.size());
        part.cosets.push_back(std::move(c));
    }
    return part;
}

std::uint64_t coset_count(std::uint64_t n_prime, std::uint64_t q) {
    require_coprime(n_prime, q);
    std::uint64_t count = 0;
    for (auto d : nt::divisors(n_prime)) count += nt::euler_phi(d) / mult_order(q, d);
    return count;
}

}  // namespace cyclicpairs
