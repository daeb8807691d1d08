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

#ifndef CYCLICPAIRS_POLY_TEXT_HPP
#define CYCLICPAIRS_POLY_TEXT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclicpairs/polynomial.hpp"

namespace cyclicpairs {

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/**
 * Parses either the descending text form ("x^4 + x^2 + x + 1", "3*x^2 - x + 2") or the ascending
 * coefficient list ("[1,1,1,0,1]"). Whitespace is ignored, LaTeX-style exponents "x^{13}" are
 * accepted, and repeated powers are summed. Coefficients must already be canonical values of f;
 * nothing is reduced implicitly.
 */
Polynomial parse_poly(std::string_view text, const Field& f);

/// Canonical descending form, e.g. "x^4 + x^2 + x + 1" or "2*x^3 + x + 4"; the zero polynomial is "0".
std::string format_poly(const Polynomial& p);

/// Ascending coefficient list, e.g. "[1,1,1,0,1]".
std::string format_coeff_list(const Polynomial& p);

}  // namespace cyclicpairs

#endif
