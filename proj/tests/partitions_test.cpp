// Copyright 2026 The cayspec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cayspec/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace cayspec {
namespace {

// Independent recursive enumeration: partitions of n with parts <= cap.
void brute_partitions(int n, int cap, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(n, cap); p >= 1; --p) {
    prefix.push_back(p);
    brute_partitions(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Cycle type of a permutation given by images, via explicit cycle walking.
CycleType cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType::from_parts(lengths);
}

// Class sizes of S_n counted by walking all n! permutations.
std::map<CycleType, long> brute_class_sizes(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<CycleType, long> sizes;
  do {
    ++sizes[cycle_type_of(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sizes;
}

TEST(EnumeratePartitionsTest, EmptyCase) {
  auto parts = enumerate_partitions(0);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_TRUE(parts[0].empty());
}

TEST(EnumeratePartitionsTest, MatchesBruteForceInDecreasingLexOrder) {
  for (int n = 1; n <= 16; ++n) {
    std::vector<std::vector<int>> expected;
    std::vector<int> prefix;
    brute_partitions(n, n, prefix, expected);
    auto got = enumerate_partitions(n);
    ASSERT_EQ(got.size(), expected.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].parts(), expected[i]);
  }
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
}

TEST(EnumeratePartitionsTest, ThirteenHasNinetyThreeDeepDiagrams) {
  auto parts = enumerate_partitions(13);
  EXPECT_EQ(parts.size(), 101u);
  auto deep = std::count_if(parts.begin(), parts.end(), [](const Partition& p) {
    return blocks_outside_first_row(p) >= 3 && blocks_outside_first_column(p) >= 3;
  });
  EXPECT_EQ(deep, 93);
}

TEST(EnumeratePartitionsTest, RejectsNegative) {
  EXPECT_THROW(enumerate_partitions(-1), DomainError);
}

TEST(PartitionTest, ValidatesParts) {
  EXPECT_THROW(Partition({1, 2}), InputError);
  EXPECT_THROW(Partition({3, 0}), InputError);
  EXPECT_EQ(Partition({3, 1}).size(), 4);
}

TEST(PartitionTest, ParseAndFormat) {
  EXPECT_EQ(Partition::parse("11,5"), Partition({11, 5}));
  EXPECT_EQ(Partition({11, 5}).to_string(), "11,5");
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_THROW(Partition::parse("3,x"), InputError);
  EXPECT_THROW(Partition::parse("3,"), InputError);
  EXPECT_THROW(Partition::parse("1,3"), InputError);
}

TEST(TransposeTest, Examples) {
  std::vector<int> hook(15, 1);
  hook[0] = 2;
  EXPECT_EQ(transpose(Partition({15, 1})), Partition(hook));
  EXPECT_EQ(transpose(Partition({2, 2})), Partition({2, 2}));
  EXPECT_EQ(transpose(Partition({4})), Partition({1, 1, 1, 1}));
}

TEST(TransposeTest, InvolutionAndBlockDuality) {
  for (int n = 0; n <= 30; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      Partition t = transpose(p);
      ASSERT_EQ(transpose(t), p);
      ASSERT_EQ(blocks_outside_first_row(p), blocks_outside_first_column(t));
    }
  }
}

TEST(DimensionTest, Examples) {
  EXPECT_EQ(dimension(Partition({9, 1})), 9);
  EXPECT_EQ(dimension(Partition({14, 2})), 104);
  EXPECT_EQ(hook_product(Partition({2, 2})), 12);
  EXPECT_EQ(dimension(Partition({2, 2})), 2);
}

TEST(DimensionTest, SumOfSquaresIsGroupOrder) {
  for (int n = 1; n <= 30; ++n) {
    BigInt total = 0;
    for (const auto& p : enumerate_partitions(n)) {
      BigInt d = dimension(p);
      total += d * d;
    }
    ASSERT_EQ(total, factorial(n)) << n;
  }
}

TEST(ClassSizeTest, MatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    auto sizes = brute_class_sizes(n);
    for (const auto& t : enumerate_cycle_types(n)) {
      ASSERT_EQ(class_size(t), sizes.at(t)) << t.to_string();
    }
  }
  EXPECT_EQ(class_size(CycleType::parse("2^1 1^2")), 6);
  EXPECT_EQ(class_size(CycleType::parse("5^1")), 24);
  EXPECT_EQ(class_size(CycleType::identity(9)), 1);
}

TEST(ClassSizeTest, SumIsGroupOrder) {
  for (int n = 1; n <= 30; ++n) {
    BigInt total = 0;
    for (const auto& t : enumerate_cycle_types(n)) total += class_size(t);
    ASSERT_EQ(total, factorial(n)) << n;
  }
}

TEST(BlocksOutsideTest, Examples) {
  EXPECT_EQ(blocks_outside_first_row(Partition({13, 3})), 3);
  std::vector<int> hook(15, 1);
  hook[0] = 2;
  EXPECT_EQ(blocks_outside_first_column(Partition(hook)), 1);
  EXPECT_EQ(blocks_outside_first_row(Partition({11, 5})), 5);
  EXPECT_EQ(blocks_outside_first_column(Partition({11, 5})), 14);
}

TEST(CycleTypeTest, ParseFormatAndSign) {
  CycleType t = CycleType::parse("5^3 1^1");
  EXPECT_EQ(t.size(), 16);
  EXPECT_EQ(t.count(5), 3);
  EXPECT_EQ(t.count(1), 1);
  EXPECT_EQ(t.count(2), 0);
  EXPECT_EQ(t.to_string(), "5^3 1^1");
  EXPECT_EQ(t.sign(), 1);
  EXPECT_EQ(t.support_size(), 15);
  EXPECT_EQ(CycleType::parse("1^1 5^3"), t);
  EXPECT_EQ(CycleType::parse("2^1 1^2").sign(), -1);
  EXPECT_THROW(CycleType::parse("5^x"), InputError);
  EXPECT_THROW(CycleType::parse("0^2"), InputError);
  EXPECT_THROW(CycleType::parse("2^1 2^3"), InputError);
}

TEST(PartitionRankerTest, RankMatchesEnumerationIndex) {
  PartitionRanker ranker(25);
  for (int n = 0; n <= 25; ++n) {
    auto parts = enumerate_partitions(n);
    ASSERT_EQ(ranker.count(n), parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) ASSERT_EQ(ranker.rank(parts[i]), i);
  }
}

}  // namespace
}  // namespace cayspec
