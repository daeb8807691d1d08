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

// Reference implementations used only by the tests. They share nothing with the library beyond raw
// field arithmetic: polynomials are plain coefficient vectors and every algorithm is the slow,
// obvious one.
#ifndef CYCLICPAIRS_TESTS_ORACLES_HPP
#define CYCLICPAIRS_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cyclicpairs/factorization.hpp"
#include "cyclicpairs/galois_field.hpp"
#include "cyclicpairs/polynomial.hpp"

namespace oracle {

using cyclicpairs::Field;
using Coeffs = std::vector<std::uint32_t>;
using Rows = std::vector<std::vector<std::uint32_t>>;

void trim(Coeffs& a);
Coeffs from_poly(const cyclicpairs::Polynomial& p);
Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs rem(const Field& f, Coeffs a, const Coeffs& b);
bool divides(const Field& f, const Coeffs& d, const Coeffs& a);
Coeffs xn_minus_one(const Field& f, std::size_t n);
Coeffs gcd(const Field& f, Coeffs a, Coeffs b);

/// gcd(x^(Q^i) - x, f) = 1 for every i <= deg f / 2.
bool irreducible(const Field& f, const Coeffs& poly);

/// Row i is x^i g(x) padded to n columns.
Rows generator_rows(const Field& f, const Coeffs& g, std::size_t n);
std::size_t rank(const Field& f, Rows rows);
/// Counts messages 1 .. q^k - 1 in plain base-q order and multiplies each by G.
std::optional<std::size_t> naive_min_distance(const Field& f, const Rows& g, std::size_t n);

/// Every monic polynomial of the given degree.
std::vector<Coeffs> monic_of_degree(const Field& f, std::size_t degree);
/// Trial division of x^n - 1 by every monic polynomial of the given degree.
bool has_divisor_of_degree(const Field& f, std::size_t n, std::size_t degree);
/// Degrees of monic divisors of x^n - 1, by trial division of all monic candidates.
std::set<std::size_t> divisor_degrees(const Field& f, std::size_t n);

std::uint64_t phi(std::uint64_t n);
std::uint64_t ord(std::uint64_t q, std::uint64_t d);

/// Multiplicity vectors over a factorization, used to draw random divisors.
using Mults = std::vector<std::uint64_t>;
Mults full_mults(const cyclicpairs::Factorization& fact);
Mults random_sub(const Mults& bound, std::mt19937_64& rng);
cyclicpairs::Polynomial product(const cyclicpairs::Factorization& fact, const Mults& m);
std::size_t degree(const cyclicpairs::Factorization& fact, const Mults& m);

}  // namespace oracle

#endif
