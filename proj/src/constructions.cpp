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

#include "cyclicpairs/constructions.hpp"

#include "cyclicpairs/poly_text.hpp"

namespace cyclicpairs {

std::string to_string(ChainLink link) {
    switch (link) {
        case ChainLink::NotMonic: return "not monic";
        case ChainLink::LengthNotCoprime: return "p divides n'";
        case ChainLink::LDividesXn1: return "L does not divide x^n - 1";
        case ChainLink::G1DividesCofactor: return "g1 does not divide (x^n - 1)/L";
        case ChainLink::G2DividesG1: return "g2 does not divide g1";
        case ChainLink::SOutOfRange: return "s out of range";
        case ChainLink::NoQuadraticFactor: return "no irreducible quadratic factor";
        case ChainLink::LengthOdd: return "n' is odd";
        case ChainLink::MdsLength: return "n does not divide q - 1";
        case ChainLink::MdsBounds: return "MDS parameter bounds violated";
    }
    return "unknown";
}

namespace {

void require_monic(const Polynomial& p, const char* name) {
    if (!p.is_monic()) throw ConstructionError(ChainLink::NotMonic, std::string(name) + " = " + format_poly(p));
}

void check_range(const ConstructionResult& r) {
    if (r.measured_ell < r.lo || r.measured_ell > r.hi)
        throw InternalConsistencyError("intersection dimension " + std::to_string(r.measured_ell) +
                                       " outside the guaranteed range");
    if (r.exact && r.measured_ell != r.target_ell)
        throw InternalConsistencyError("certified construction missed its target dimension");
}

}  // namespace

ConstructionResult construct_L(std::uint64_t n, const Field& f, const Polynomial& L, const Polynomial& g1,
                               const Polynomial& g2) {
    require_monic(L, "L");
    require_monic(g1, "g1");
    require_monic(g2, "g2");
    const auto xn1 = Polynomial::xn_minus_one(f, n);
    auto [cofactor, rem_l] = divmod(xn1, L);
    if (!rem_l.is_zero()) throw ConstructionError(ChainLink::LDividesXn1, format_poly(L));
    auto [rest, rem_g1] = divmod(cofactor, g1);
    if (!rem_g1.is_zero()) throw ConstructionError(ChainLink::G1DividesCofactor, format_poly(g1));
    if (!divides(g2, g1)) throw ConstructionError(ChainLink::G2DividesG1, format_poly(g2));

    // rest = (x^n - 1) / (L g1), k(x) = g2 * rest
    const std::size_t ell = L.deg();
    ConstructionResult r{make_code(n, f, g1), make_code(n, f, g2 * rest), ell, ell, ell + g1.deg(),
                         gcd(g1, rest).is_one(), 0, std::nullopt, std::nullopt, std::nullopt};
    r.measured_ell = pair_analyze(r.c1, r.c2).ell;
    check_range(r);
    return r;
}

ConstructionResult construct_repeated(std::uint64_t n_prime, std::uint64_t nu, const Field& f, const Polynomial& L,
                                      const Polynomial& g1, const Polynomial& g2, std::uint64_t s) {
    const std::uint64_t p = f.characteristic();
    if (n_prime == 0 || n_prime % p == 0)
        throw ConstructionError(ChainLink::LengthNotCoprime, "n' = " + std::to_string(n_prime));
    require_monic(L, "L");
    require_monic(g1, "g1");
    require_monic(g2, "g2");
    std::uint64_t p_power = 1;
    for (std::uint64_t i = 0; i < nu; ++i) p_power *= p;
    const std::uint64_t n = p_power * n_prime;

    auto [cofactor, rem_l] = divmod(Polynomial::xn_minus_one(f, n_prime), L);
    if (!rem_l.is_zero()) throw ConstructionError(ChainLink::LDividesXn1, format_poly(L));
    if (!divides(g1, cofactor)) throw ConstructionError(ChainLink::G1DividesCofactor, format_poly(g1));
    const Polynomial big_g1 = pow(g1, p_power);
    if (!divides(g2, big_g1)) throw ConstructionError(ChainLink::G2DividesG1, format_poly(g2) + " vs g1^p^nu");
    if (s > p_power) throw ConstructionError(ChainLink::SOutOfRange, "s = " + std::to_string(s));

    auto r = construct_L(n, f, pow(L, s), big_g1, g2);
    // target is ell * s; construct_L already used deg(L^s) = ell * s
    return r;
}

ConstructionResult construct_zero_intersection(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                               const Polynomial& g1, const Polynomial& g2) {
    return construct_repeated(n_prime, nu, f, Polynomial::constant(f, 1), g1, g2, 1);
}

ConstructionResult construct_linear_intersection(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                                 const Polynomial& g1, const Polynomial& g2, std::uint64_t s) {
    const Polynomial x_minus_1(f, {f.neg(1), 1});
    return construct_repeated(n_prime, nu, f, x_minus_1, g1, g2, s);
}

ConstructionResult construct_even_quadratic(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                            const Polynomial& g1, const Polynomial& g2, std::uint64_t s) {
    if (n_prime % 2 != 0) throw ConstructionError(ChainLink::LengthOdd, "n' = " + std::to_string(n_prime));
    return construct_repeated(n_prime, nu, f, Polynomial::xn_minus_one(f, 2), g1, g2, s);
}

std::optional<Polynomial> first_quadratic_factor(std::uint64_t n_prime, const Field& f) {
    for (const auto& factor : factor_xn1(n_prime, f).factors)
        if (factor.poly.deg() == 2) return factor.poly;
    return std::nullopt;
}

ConstructionResult construct_irreducible_quadratic(std::uint64_t n_prime, std::uint64_t nu, const Field& f,
                                                   const Polynomial& g1, const Polynomial& g2, std::uint64_t s) {
    auto a = first_quadratic_factor(n_prime, f);
    if (!a) throw ConstructionError(ChainLink::NoQuadraticFactor, "n' = " + std::to_string(n_prime));
    return construct_repeated(n_prime, nu, f, *a, g1, g2, s);
}

ConstructionResult construct_mds(const Field& f, std::uint64_t n, std::size_t k1, std::size_t k2, std::size_t ell,
                                 const std::optional<DistanceOptions>& distances) {
    if (n == 0 || (f.order() - 1) % n != 0)
        throw ConstructionError(ChainLink::MdsLength, "n = " + std::to_string(n) + ", q = " + std::to_string(f.order()));
    if (!(ell <= k1 && k1 <= k2 && k2 <= n && k1 + k2 - ell <= n))
        throw ConstructionError(ChainLink::MdsBounds, "n = " + std::to_string(n) + ", k1 = " + std::to_string(k1) +
                                                          ", k2 = " + std::to_string(k2) + ", ell = " + std::to_string(ell));
    const auto alpha = root_of_unity(f, n);
    auto roots_product = [&](std::size_t from, std::size_t to) {  // prod_{i=from}^{to-1} (x - alpha^i)
        Polynomial acc = Polynomial::constant(f, 1);
        for (std::size_t i = from; i < to; ++i)
            acc *= Polynomial(f, {f.neg(f.pow(alpha, static_cast<std::int64_t>(i))), 1});
        return acc;
    };
    const auto g1 = roots_product(0, n - k1);
    const auto g2 = roots_product(k2 - ell, n - ell);
    ConstructionResult r{make_code(n, f, g1), make_code(n, f, g2), ell, ell, ell, true, 0, alpha,
                         std::nullopt, std::nullopt};
    PairOptions opts;
    if (distances) {
        opts.with_distances = true;
        opts.distance = *distances;
    }
    const auto report = pair_analyze(r.c1, r.c2, opts);
    r.measured_ell = report.ell;
    r.d1 = report.d1;
    r.d2 = report.d2;
    check_range(r);
    return r;
}

}  // namespace cyclicpairs
