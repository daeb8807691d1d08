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

#include <numeric>
#include <set>

#include "cyclicpairs/cyclotomic.hpp"
#include "oracles.hpp"

using namespace cyclicpairs;
using Set = std::vector<std::uint64_t>;

TEST(MultOrder, Examples) {
    EXPECT_EQ(mult_order(2, 7), 3u);
    EXPECT_EQ(mult_order(5, 1), 1u);
    EXPECT_EQ(mult_order(2, 15), 4u);
    EXPECT_THROW(mult_order(2, 6), std::invalid_argument);
}

TEST(CosetOf, Examples) {
    EXPECT_EQ(coset_of(7, 2, 1), (Set{1, 2, 4}));
    EXPECT_EQ(coset_of(11, 3, 0), (Set{0}));
    EXPECT_EQ(coset_of(15, 2, 5), (Set{5, 10}));
    EXPECT_THROW(coset_of(6, 2, 1), std::invalid_argument);
    EXPECT_THROW(coset_of(7, 2, 7), std::invalid_argument);
}

TEST(CosetPartition, Examples) {
    auto members = [](const CosetPartition& p) {
        std::vector<Set> out;
        for (const auto& c : p.cosets) out.push_back(c.members);
        return out;
    };
    EXPECT_EQ(members(coset_partition(7, 2)), (std::vector<Set>{{0}, {1, 2, 4}, {3, 5, 6}}));
    EXPECT_EQ(members(coset_partition(1, 4)), (std::vector<Set>{{0}}));
    EXPECT_EQ(members(coset_partition(15, 2)),
              (std::vector<Set>{{0}, {1, 2, 4, 8}, {3, 6, 9, 12}, {5, 10}, {7, 11, 13, 14}}));
    EXPECT_THROW(coset_partition(9, 3), std::invalid_argument);
}

TEST(CosetCount, Examples) {
    EXPECT_EQ(coset_count(7, 2), 3u);
    EXPECT_EQ(coset_count(1, 9), 1u);
    EXPECT_EQ(coset_count(15, 2), 5u);
}

TEST(Cyclotomic, PartitionLaws) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::uint64_t n = 1; n <= 512; ++n) {
            if (std::gcd(n, q) != 1) continue;
            const auto part = coset_partition(n, q);
            std::vector<int> seen(n, 0);
            std::uint64_t prev_rep = 0;
            for (std::size_t i = 0; i < part.cosets.size(); ++i) {
                const auto& c = part.cosets[i];
                if (i) ASSERT_GT(c.representative(), prev_rep);
                prev_rep = c.representative();
                ASSERT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
                for (auto a : c.members) {
                    ++seen[a];
                    ASSERT_EQ(n / std::gcd(a, n), c.order);
                    ASSERT_TRUE(std::binary_search(c.members.begin(), c.members.end(), a * q % n));
                }
                ASSERT_EQ(c.size(), oracle::ord(q, c.order));
            }
            ASSERT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
            std::uint64_t formula = 0;
            for (std::uint64_t d = 1; d <= n; ++d)
                if (n % d == 0) {
                    formula += oracle::phi(d) / oracle::ord(q, d);
                    const auto it = part.by_order.find(d);
                    ASSERT_NE(it, part.by_order.end());
                    ASSERT_EQ(it->second.size(), oracle::phi(d) / oracle::ord(q, d));
                    for (auto idx : it->second) ASSERT_EQ(part.cosets[idx].size(), oracle::ord(q, d));
                }
            ASSERT_EQ(coset_count(n, q), formula);
            ASSERT_EQ(part.cosets.size(), formula);
        }
    }
}

TEST(Cyclotomic, Helpers) {
    EXPECT_EQ(additive_order(6, 15), 5u);
    EXPECT_EQ(additive_order(0, 15), 1u);
    EXPECT_EQ(euler_phi(36), 12u);
    EXPECT_EQ(divisors_of(12), (Set{1, 2, 3, 4, 6, 12}));
}
