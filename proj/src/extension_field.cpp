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

#include "extension_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "number_theory.hpp"

namespace cyclicpairs::detail {

ExtensionField::ExtensionField(std::uint32_t p, std::size_t degree)
    : prime_(make_field(p, 1)), degree_(degree), modulus_(least_irreducible(prime_, degree)), order_(1) {
    for (std::size_t i = 0; i < degree; ++i) order_ *= p;
}

std::shared_ptr<const ExtensionField> ExtensionField::get(std::uint32_t p, std::size_t degree) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::size_t>, std::shared_ptr<const ExtensionField>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, degree}); it != cache.end()) return it->second;
    }
    std::shared_ptr<const ExtensionField> ext(new ExtensionField(p, degree));
    std::lock_guard lock(mutex);
    return cache.emplace(std::pair{p, degree}, std::move(ext)).first->second;
}

ExtensionField::Element ExtensionField::element_at(std::uint64_t index) const {
    std::vector<Field::value_type> digits;
    const auto p = prime_.characteristic();
    while (index != 0) {
        digits.push_back(static_cast<Field::value_type>(index % p));
        index /= p;
    }
    if (digits.size() > degree_) throw std::out_of_range("element index exceeds field order");
    return Polynomial(prime_, std::move(digits));
}

ExtensionField::Element ExtensionField::pow(Element base, const BigInt& e) const {
    Element result = one();
    if (e == 0) return result;
    const std::size_t top = boost::multiprecision::msb(e);
    for (std::size_t i = top + 1; i-- > 0;) {
        result = mul(result, result);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mul(result, base);
    }
    return result;
}

bool ExtensionField::has_order(const Element& a, std::uint64_t n) const {
    if (a.is_zero() || !pow(a, n).is_one()) return false;
    for (const auto& [r, e] : nt::factorize(n)) {
        (void)e;
        if (pow(a, n / r).is_one()) return false;
    }
    return true;
}

ExtensionField::Element ExtensionField::root_of_unity(std::uint64_t n) const {
    const BigInt group = order_ - 1;
    if (n == 0 || group % n != 0) throw std::invalid_argument("n does not divide the multiplicative group order");
    const BigInt cofactor = group / n;
    for (std::uint64_t index = 1; index < order_; ++index) {
        Element gamma = pow(element_at(index), cofactor);
        if (has_order(gamma, n)) return gamma;
    }
    throw std::logic_error("no element of the requested order");
}

}  // namespace cyclicpairs::detail
