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

#include "cyclicpairs/poly_text.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace cyclicpairs {

namespace {

constexpr std::uint64_t kMaxParsedDegree = 1u << 20;

class Parser {
   public:
    Parser(std::string_view text, const Field& f) : text_(text), field_(f) {}

    Polynomial parse() {
        skip_ws();
        if (peek() == '[') return parse_list();
        return parse_terms();
    }

   private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::uint64_t number() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
            if (v > (std::uint64_t{1} << 40)) fail("number too large");
        }
        return v;
    }

    Field::value_type coefficient() {
        const std::size_t start = pos_;
        const auto v = number();
        if (!field_.contains(v)) {
            pos_ = start;
            fail("coefficient " + std::to_string(v) + " is not an element of GF(" + std::to_string(field_.order()) +
                 ")");
        }
        return static_cast<Field::value_type>(v);
    }

    Polynomial parse_list() {
        ++pos_;  // '['
        std::vector<Field::value_type> coeffs;
        skip_ws();
        if (peek() != ']') {
            while (true) {
                coeffs.push_back(coefficient());
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == ']') break;
                fail("expected ',' or ']'");
            }
        }
        ++pos_;
        skip_ws();
        if (!at_end()) fail("trailing characters after coefficient list");
        return Polynomial(field_, std::move(coeffs));
    }

    std::uint64_t exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        const bool braced = peek() == '{';
        if (braced) ++pos_;
        const std::size_t start = pos_;
        const auto e = number();
        if (e > kMaxParsedDegree) {
            pos_ = start;
            fail("exponent too large");
        }
        if (braced) {
            skip_ws();
            if (peek() != '}') fail("expected '}'");
            ++pos_;
        }
        return e;
    }

    Polynomial parse_terms() {
        std::vector<Field::value_type> acc;
        auto accumulate = [&](std::uint64_t degree, Field::value_type c, bool negative) {
            if (acc.size() <= degree) acc.resize(degree + 1, 0);
            acc[degree] = negative ? field_.sub(acc[degree], c) : field_.add(acc[degree], c);
        };

        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        while (true) {
            skip_ws();
            Field::value_type c = 1;
            std::uint64_t degree = 0;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = coefficient();
                skip_ws();
                if (peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (peek() != 'x') fail("expected 'x' after '*'");
                }
            } else if (peek() != 'x') {
                fail("expected a term");
            }
            if (peek() == 'x') {
                ++pos_;
                degree = exponent();
            }
            accumulate(degree, c, negative);

            skip_ws();
            if (at_end()) break;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                continue;
            }
            fail("expected '+' or '-'");
        }
        return Polynomial(field_, std::move(acc));
    }

    std::string_view text_;
    const Field& field_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Field& f) { return Parser(text, f).parse(); }

std::string format_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += std::to_string(c[k]);
            continue;
        }
        if (c[k] != 1) out += std::to_string(c[k]) + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
}

std::string format_coeff_list(const Polynomial& p) {
    std::string out = "[";
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(c[i]);
    }
    return out + "]";
}

}  // namespace cyclicpairs
