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

#include "cyclicpairs/cyclic_code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "cyclicpairs/poly_text.hpp"

namespace cyclicpairs {

namespace {

// q^k, or nullopt when it exceeds limit
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t k, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > limit / q) return std::nullopt;
        r *= q;
    }
    return r;
}

using Range = std::pair<std::uint64_t, std::uint64_t>;

std::vector<Range> split_range(std::uint64_t lo, std::uint64_t hi, unsigned parts) {
    std::vector<Range> out;
    const std::uint64_t total = hi - lo;
    parts = static_cast<unsigned>(std::clamp<std::uint64_t>(parts, 1, std::max<std::uint64_t>(total, 1)));
    for (unsigned i = 0; i < parts; ++i)
        out.emplace_back(lo + total * i / parts, lo + total * (i + 1) / parts);
    return out;
}

template <class Scan>
std::size_t parallel_min(std::uint64_t count, unsigned threads, Scan scan) {
    const auto ranges = split_range(1, count, threads);
    std::vector<std::size_t> minima(ranges.size(), std::numeric_limits<std::size_t>::max());
    if (ranges.size() == 1) {
        minima[0] = scan(ranges[0].first, ranges[0].second);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t i = 0; i < ranges.size(); ++i)
            workers.emplace_back([&, i] { minima[i] = scan(ranges[i].first, ranges[i].second); });
    }
    return *std::min_element(minima.begin(), minima.end());
}

std::size_t binary_scan(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t lo, std::uint64_t hi) {
    const std::size_t words = rows.empty() ? 0 : rows[0].size();
    std::vector<std::uint64_t> cw(words, 0);
    const std::uint64_t start = lo ^ (lo >> 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
        if ((start >> j) & 1)
            for (std::size_t w = 0; w < words; ++w) cw[w] ^= rows[j][w];
    auto weight = [&] {
        std::size_t s = 0;
        for (auto w : cw) s += static_cast<std::size_t>(std::popcount(w));
        return s;
    };
    std::size_t best = weight();
    for (std::uint64_t c = lo + 1; c < hi; ++c) {
        const auto& row = rows[static_cast<std::size_t>(std::countr_zero(c))];
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
        best = std::min(best, weight());
    }
    return best;
}

// Modular q-ary Gray code: from counter c - 1 to c, exactly digit j = (trailing zero base-q digits
// of c) advances by one mod q.
std::size_t qary_scan(const CyclicCode& code, std::uint64_t lo, std::uint64_t hi) {
    const Field& f = code.field();
    const std::uint64_t q = f.order();
    const std::size_t n = code.length(), k = code.dimension();
    const auto g = code.generator().coeffs();
    const std::size_t r = g.size() - 1;

    std::vector<Field::value_type> digits(k, 0);
    {
        std::vector<std::uint64_t> b(k + 1, 0);
        std::uint64_t c = lo;
        for (std::size_t j = 0; j < k; ++j, c /= q) b[j] = c % q;
        for (std::size_t j = 0; j < k; ++j) digits[j] = static_cast<Field::value_type>((b[j] + q - b[j + 1]) % q);
    }
    std::vector<Field::value_type> cw(n, 0);
    for (std::size_t j = 0; j < k; ++j)
        if (digits[j] != 0)
            for (std::size_t i = 0; i <= r; ++i) cw[i + j] = f.add(cw[i + j], f.mul(digits[j], g[i]));
    std::size_t weight = static_cast<std::size_t>(std::count_if(cw.begin(), cw.end(), [](auto v) { return v != 0; }));
    std::size_t best = weight;

    for (std::uint64_t c = lo + 1; c < hi; ++c) {
        std::size_t j = 0;
        for (std::uint64_t t = c; t % q == 0; t /= q) ++j;
        const auto old = digits[j];
        const auto now = static_cast<Field::value_type>((old + 1) % q);
        digits[j] = now;
        const auto delta = f.sub(now, old);
        for (std::size_t i = 0; i <= r; ++i) {
            auto& x = cw[i + j];
            const bool was = x != 0;
            x = f.add(x, f.mul(delta, g[i]));
            weight += static_cast<std::size_t>(x != 0) - static_cast<std::size_t>(was);
        }
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace

CapExceeded::CapExceeded(std::uint64_t cap, std::size_t q, std::size_t k)
    : std::runtime_error("enumerating " + std::to_string(q) + "^" + std::to_string(k) +
                         " codewords exceeds the cap of " + std::to_string(cap) +
                         "; use a smaller instance or raise the cap"),
      cap_(cap) {}

Polynomial CyclicCode::check_polynomial() const {
    return exact_div(Polynomial::xn_minus_one(field(), n_), g_);
}

bool CyclicCode::contains(const Polynomial& word) const {
    if (word.field() != field()) return false;
    if (!word.is_zero() && word.deg() >= n_) return false;
    return divides(g_, word);
}

CyclicCode make_code(std::size_t n, const Field& f, const Polynomial& g) {
    if (n < 1) throw CodeError("code length must be >= 1");
    if (g.field() != f) throw FieldMismatch("generator polynomial is over a different field");
    if (g.is_zero()) throw CodeError("generator polynomial is zero");
    Polynomial monic = g.monic();
    const auto rem = Polynomial::xn_minus_one(f, n) % monic;
    if (!rem.is_zero())
        throw CodeError("generator " + format_poly(monic) + " does not divide x^" + std::to_string(n) +
                        " - 1 (remainder " + format_poly(rem) + ")");
    return CyclicCode(n, std::move(monic));
}

Matrix generator_matrix(const CyclicCode& code) {
    Matrix m{code.dimension(), code.length(), {}};
    m.data.assign(m.rows * m.cols, 0);
    const auto g = code.generator().coeffs();
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < g.size(); ++j) m.at(i, i + j) = g[j];
    return m;
}

DistanceReport min_distance(const CyclicCode& code, const DistanceOptions& options) {
    DistanceReport report;
    const std::size_t k = code.dimension();
    if (k == 0) return report;
    const std::uint64_t q = code.field().order();
    const auto count = bounded_power(q, k, options.cap);
    if (!count) throw CapExceeded(options.cap, q, k);
    report.codewords_scanned = *count - 1;

    if (q == 2) {
        const std::size_t n = code.length(), words = (n + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
        const auto g = code.generator().coeffs();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (g[j] != 0) rows[i][(i + j) / 64] |= std::uint64_t{1} << ((i + j) % 64);
        report.d = parallel_min(*count, options.threads,
                                [&](std::uint64_t lo, std::uint64_t hi) { return binary_scan(rows, lo, hi); });
    } else {
        report.d = parallel_min(*count, options.threads,
                                [&](std::uint64_t lo, std::uint64_t hi) { return qary_scan(code, lo, hi); });
    }
    return report;
}

CyclicCode dual_code(const CyclicCode& code) {
    return make_code(code.length(), code.field(), code.check_polynomial().reciprocal());
}

std::string format_params(std::size_t n, std::size_t k, std::optional<std::size_t> d, std::uint64_t q) {
    std::string s = "[" + std::to_string(n) + "," + std::to_string(k);
    if (d) s += "," + std::to_string(*d);
    return s + "]_" + std::to_string(q);
}

}  // namespace cyclicpairs
