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

#ifndef CYCLICPAIRS_CYCLIC_CODE_HPP
#define CYCLICPAIRS_CYCLIC_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclicpairs/polynomial.hpp"

namespace cyclicpairs {

class CodeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Distance enumeration would visit more codewords than allowed.
class CapExceeded : public std::runtime_error {
   public:
    CapExceeded(std::uint64_t cap, std::size_t q, std::size_t k);
    std::uint64_t cap() const noexcept { return cap_; }

   private:
    std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t{1} << 24;

/// Dense row-major matrix of canonical field values.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Field::value_type> data;

    Field::value_type& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Field::value_type at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<const Field::value_type> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

/// Cyclic code of length n over a field, given by its monic generator g | x^n - 1.
class CyclicCode {
   public:
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return k_; }
    const Polynomial& generator() const noexcept { return g_; }
    const Field& field() const noexcept { return g_.field(); }

    /// h(x) = (x^n - 1) / g(x)
    Polynomial check_polynomial() const;
    /// A word (as a polynomial of degree < n) is a codeword iff g divides it.
    bool contains(const Polynomial& word) const;

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) noexcept {
        return a.n_ == b.n_ && a.g_ == b.g_;
    }

   private:
    friend CyclicCode make_code(std::size_t n, const Field& f, const Polynomial& g);
    CyclicCode(std::size_t n, Polynomial g) : n_(n), k_(n - g.deg()), g_(std::move(g)) {}

    std::size_t n_;
    std::size_t k_;
    Polynomial g_;
};

/// Normalizes g to monic and checks g | x^n - 1; throws CodeError otherwise (message shows the remainder).
CyclicCode make_code(std::size_t n, const Field& f, const Polynomial& g);

/// Row i holds x^i g(x), 0 <= i < k.
Matrix generator_matrix(const CyclicCode& code);

struct DistanceOptions {
    std::uint64_t cap = kDefaultCodewordCap;
    unsigned threads = 1;
};

struct DistanceReport {
    /// Empty for the zero code, which has no nonzero codewords.
    std::optional<std::size_t> d;
    std::uint64_t codewords_scanned = 0;
    std::string method = "full-enumeration";
};

/**
 * Exact minimum Hamming weight over all q^k - 1 nonzero codewords. Messages are walked in a
 * (modular q-ary) Gray order, so each step adds a multiple of one generator row. Binary codes use
 * bit-packed words. The message space can be split across threads; the result does not depend on
 * the split. Throws CapExceeded when q^k > cap.
 */
DistanceReport min_distance(const CyclicCode& code, const DistanceOptions& options = {});

/// Generator is the monic reciprocal of h(x) = (x^n - 1) / g(x).
CyclicCode dual_code(const CyclicCode& code);

/// "[n,k,d]_q", or "[n,k]_q" when d is unknown.
std::string format_params(std::size_t n, std::size_t k, std::optional<std::size_t> d, std::uint64_t q);

}  // namespace cyclicpairs

#endif
