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

#include <gtest/gtest.h>

#include "cyclicpairs/cyclotomic.hpp"
#include "cyclicpairs/factorization.hpp"
#include "cyclicpairs/poly_text.hpp"
#include "oracles.hpp"

using namespace cyclicpairs;

namespace {

Polynomial P(const char* text, std::uint64_t q = 2) { return parse_poly(text, field_of_order(q)); }

std::vector<std::string> rendered(const Factorization& fact) {
    std::vector<std::string> out;
    for (const auto& f : fact.factors)
        out.push_back(format_poly(f.poly) + "^" + std::to_string(f.multiplicity));
    return out;
}

}  // namespace

TEST(SplitLength, Examples) {
    auto s = split_length(9, field_of_order(2));
    EXPECT_EQ(s.nu, 0u);
    EXPECT_EQ(s.n_prime, 9u);
    s = split_length(14, field_of_order(2));
    EXPECT_EQ(s.nu, 1u);
    EXPECT_EQ(s.n_prime, 7u);
    s = split_length(12, field_of_order(3));
    EXPECT_EQ(s.nu, 1u);
    EXPECT_EQ(s.n_prime, 4u);
    EXPECT_EQ(s.p_power, 3u);
    s = split_length(24, field_of_order(4));
    EXPECT_EQ(s.nu, 3u);
    EXPECT_EQ(s.p_power, 8u);
    EXPECT_THROW(split_length(0, field_of_order(2)), std::invalid_argument);
}

TEST(MinimalPoly, Examples) {
    const auto f = field_of_order(2);
    EXPECT_EQ(minimal_poly(7, f, {0}), P("x + 1"));
    EXPECT_EQ(minimal_poly(15, f, {5, 10}), P("x^2 + x + 1"));
    EXPECT_EQ(minimal_poly(7, f, {1, 2, 4}), P("x^3 + x + 1"));
    EXPECT_EQ(minimal_poly(7, f, {3, 5, 6}), P("x^3 + x^2 + 1"));
    EXPECT_EQ(minimal_poly(5, field_of_order(3), {0}), P("x + 2", 3));
}

TEST(FactorXn1, Examples) {
    const auto f = field_of_order(2);
    EXPECT_EQ(rendered(factor_xn1(7, f)), (std::vector<std::string>{"x + 1^1", "x^3 + x + 1^1", "x^3 + x^2 + 1^1"}));
    EXPECT_EQ(rendered(factor_xn1(2, f)), (std::vector<std::string>{"x + 1^2"}));
    EXPECT_EQ(rendered(factor_xn1(9, f)),
              (std::vector<std::string>{"x + 1^1", "x^2 + x + 1^1", "x^6 + x^3 + 1^1"}));
}

TEST(FactorXn1, OrderedByOrderThenRepresentative) {
    const auto fact = factor_xn1(21, field_of_order(2));
    for (std::size_t i = 1; i < fact.factors.size(); ++i) {
        const auto& a = fact.factors[i - 1];
        const auto& b = fact.factors[i];
        EXPECT_TRUE(a.order < b.order || (a.order == b.order && a.coset_rep < b.coset_rep));
    }
}

TEST(FactorXn1, RoundTripAndIrreducibility) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto f = field_of_order(q);
        for (std::uint64_t n = 1; n <= 40; ++n) {
            const auto fact = factor_xn1(n, f);
            const auto split = split_length(n, f);
            oracle::Coeffs prod{1};
            for (const auto& fac : fact.factors) {
                ASSERT_TRUE(fac.poly.is_monic());
                ASSERT_EQ(fac.multiplicity, split.p_power);
                ASSERT_EQ(fac.poly.deg(), oracle::ord(q, fac.order));
                ASSERT_EQ(fac.poly.deg(), coset_of(split.n_prime, q, fac.coset_rep).size());
                ASSERT_TRUE(oracle::irreducible(f, oracle::from_poly(fac.poly))) << q << " " << n;
                for (std::uint64_t i = 0; i < fac.multiplicity; ++i)
                    prod = oracle::mul(f, prod, oracle::from_poly(fac.poly));
            }
            ASSERT_EQ(prod, oracle::xn_minus_one(f, n)) << q << " " << n;
            ASSERT_EQ(fact.product(), Polynomial::xn_minus_one(f, n));
            ASSERT_EQ(fact.factors.size(), coset_count(split.n_prime, q));
        }
    }
}

TEST(FactorXn1, LargeExtensionDegree) {
    // ord_59(2) = 58, so alpha lives in GF(2^58).
    const auto f = field_of_order(2);
    const auto fact = factor_xn1(59, f);
    ASSERT_EQ(fact.factors.size(), 2u);
    EXPECT_EQ(fact.factors[1].poly.deg(), 58u);
    EXPECT_TRUE(oracle::irreducible(f, oracle::from_poly(fact.factors[1].poly)));
    EXPECT_EQ(fact.product(), Polynomial::xn_minus_one(f, 59));
}

TEST(RootOfUnityContext, ExtensionDegree) {
    EXPECT_EQ(RootOfUnityContext(7, field_of_order(2)).extension_degree(), 3u);
    EXPECT_EQ(RootOfUnityContext(15, field_of_order(4)).extension_degree(), 2u);
    EXPECT_EQ(RootOfUnityContext(1, field_of_order(9)).extension_degree(), 1u);
}

TEST(RootOfUnity, InBaseField) {
    for (std::uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
        const auto f = field_of_order(q);
        for (std::uint64_t n = 1; n < q; ++n) {
            if ((q - 1) % n) {
                EXPECT_THROW(root_of_unity(f, n), std::invalid_argument);
                continue;
            }
            const auto a = root_of_unity(f, n);
            EXPECT_EQ(f.multiplicative_order(a), n);
            // first beta (ascending) whose power has exact order n
            for (Field::value_type b = 1; b < q; ++b) {
                const auto g = f.pow(b, static_cast<std::int64_t>((q - 1) / n));
                if (f.multiplicative_order(g) == n) {
                    EXPECT_EQ(a, g);
                    break;
                }
            }
        }
    }
}
