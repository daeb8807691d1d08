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

#include "cyclicpairs/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "extension_field.hpp"
#include "number_theory.hpp"

namespace cyclicpairs {

LengthSplit split_length(std::uint64_t n, const Field& f) {
    if (n < 1) throw std::invalid_argument("code length must be >= 1");
    LengthSplit s;
    s.n_prime = n;
    const std::uint64_t p = f.characteristic();
    while (s.n_prime % p == 0) {
        s.n_prime /= p;
        ++s.nu;
        s.p_power *= p;
    }
    return s;
}

Polynomial Factorization::product() const {
    Polynomial acc = Polynomial::constant(field, 1);
    for (const auto& f : factors) acc *= pow(f.poly, f.multiplicity);
    return acc;
}

struct RootOfUnityContext::Impl {
    std::uint64_t n_prime = 1;
    Field base;
    std::size_t t = 1;
    std::shared_ptr<const detail::ExtensionField> ext;
    detail::ExtensionField::Element alpha;
    // images of the GF(q) elements in the extension, and the way back
    std::vector<detail::ExtensionField::Element> embed;
    std::map<std::vector<Field::value_type>, Field::value_type> coerce;

    Impl(std::uint64_t np, Field f) : n_prime(np), base(std::move(f)), alpha(make_field(base.characteristic(), 1)) {}

    detail::ExtensionField::Element digits_in(const detail::ExtensionField::Element& zeta, Field::value_type v) const {
        // sum_i digit_i(v) zeta^i
        const auto p = base.characteristic();
        auto acc = ext->zero();
        auto power = ext->one();
        while (v != 0) {
            auto term = power;
            term.scale(v % p);
            acc += term;
            power = ext->mul(power, zeta);
            v /= p;
        }
        return acc;
    }

    void build_embedding() {
        const std::uint64_t q = base.order();
        const std::uint32_t m = base.degree();
        auto zeta = ext->one();
        if (m > 1) zeta = ext->element_at(base.characteristic());  // x, the identity embedding when t = 1
        if (m > 1 && t > 1) {
            const Polynomial mu(ext->prime_field(), base.modulus());
            auto mu_at = [&](const detail::ExtensionField::Element& z) {
                auto acc = ext->zero();
                for (std::size_t i = mu.coeffs().size(); i-- > 0;)
                    acc = ext->mul(acc, z) + Polynomial::constant(ext->prime_field(), mu.coeff(i));
                return acc;
            };
            const auto gamma = ext->root_of_unity(q - 1);
            auto z = ext->one();
            bool found = false;
            for (std::uint64_t j = 0; j + 1 < q; ++j, z = ext->mul(z, gamma)) {
                if (mu_at(z).is_zero()) {
                    zeta = z;
                    found = true;
                    break;
                }
            }
            if (!found) throw InternalConsistencyError("base field modulus has no root in the extension");
        }
        embed.reserve(q);
        for (std::uint64_t v = 0; v < q; ++v) {
            auto img = digits_in(zeta, static_cast<Field::value_type>(v));
            coerce.emplace(std::vector<Field::value_type>(img.coeffs().begin(), img.coeffs().end()),
                           static_cast<Field::value_type>(v));
            embed.push_back(std::move(img));
        }
        if (coerce.size() != q) throw InternalConsistencyError("base field embedding is not injective");
    }
};

RootOfUnityContext::RootOfUnityContext(std::uint64_t n_prime, Field base)
    : impl_(std::make_unique<Impl>(n_prime, std::move(base))) {
    auto& im = *impl_;
    im.t = mult_order(im.base.order(), n_prime);
    im.ext = detail::ExtensionField::get(im.base.characteristic(), std::size_t{im.base.degree()} * im.t);
    im.alpha = im.ext->root_of_unity(n_prime);
    im.build_embedding();
}

RootOfUnityContext::~RootOfUnityContext() = default;
RootOfUnityContext::RootOfUnityContext(RootOfUnityContext&&) noexcept = default;
RootOfUnityContext& RootOfUnityContext::operator=(RootOfUnityContext&&) noexcept = default;

std::uint64_t RootOfUnityContext::n_prime() const noexcept { return impl_->n_prime; }
std::size_t RootOfUnityContext::extension_degree() const noexcept { return impl_->t; }

std::vector<Field::value_type> RootOfUnityContext::alpha_digits() const {
    return {impl_->alpha.coeffs().begin(), impl_->alpha.coeffs().end()};
}

Polynomial RootOfUnityContext::minimal_poly(const std::vector<std::uint64_t>& coset) const {
    const auto& im = *impl_;
    const auto& ext = *im.ext;
    // coefficients of the running product, ascending, each an extension element
    std::vector<detail::ExtensionField::Element> prod{ext.one()};
    for (auto j : coset) {
        if (j >= im.n_prime) throw std::invalid_argument("coset member out of range");
        const auto root = ext.pow(im.alpha, j);
        std::vector<detail::ExtensionField::Element> next(prod.size() + 1, ext.zero());
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] += prod[i];
            next[i] -= ext.mul(prod[i], root);
        }
        prod = std::move(next);
    }
    std::vector<Field::value_type> coeffs;
    coeffs.reserve(prod.size());
    for (const auto& c : prod) {
        if (ext.pow(c, im.base.order()) != c)
            throw InternalConsistencyError("minimal polynomial coefficient is not fixed by the q-power Frobenius");
        auto it = im.coerce.find(std::vector<Field::value_type>(c.coeffs().begin(), c.coeffs().end()));
        if (it == im.coerce.end())
            throw InternalConsistencyError("minimal polynomial coefficient is outside the embedded base field");
        coeffs.push_back(it->second);
    }
    return Polynomial(im.base, std::move(coeffs));
}

Polynomial minimal_poly(std::uint64_t n_prime, const Field& f, const std::vector<std::uint64_t>& coset) {
    return RootOfUnityContext(n_prime, f).minimal_poly(coset);
}

Factorization factor_xn1(std::uint64_t n, const Field& f) {
    const auto split = split_length(n, f);
    Factorization out{n, f, split.nu, split.n_prime, {}};
    const auto part = coset_partition(split.n_prime, f.order());
    const RootOfUnityContext ctx(split.n_prime, f);
    for (const auto& [d, indices] : part.by_order) {
        for (auto idx : indices) {
            const auto& coset = part.cosets[idx];
            out.factors.push_back({ctx.minimal_poly(coset.members), split.p_power, coset.representative(), d});
        }
    }
    return out;
}

Field::value_type root_of_unity(const Field& f, std::uint64_t n) {
    const std::uint64_t group = f.order() - 1;
    if (n == 0 || group % n != 0)
        throw std::invalid_argument(std::to_string(n) + " does not divide q - 1 = " + std::to_string(group));
    const auto primes = nt::factorize(n);
    for (std::uint64_t beta = 1; beta < f.order(); ++beta) {
        const auto gamma = f.pow(static_cast<Field::value_type>(beta), static_cast<std::int64_t>(group / n));
        bool exact = true;
        for (const auto& [r, e] : primes) {
            (void)e;
            if (f.pow(gamma, static_cast<std::int64_t>(n / r)) == 1) exact = false;
        }
        if (exact) return gamma;
    }
    throw std::logic_error("no root of unity of the requested order");
}

}  // namespace cyclicpairs
