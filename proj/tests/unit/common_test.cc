// Copyright 2026 The DesignProbe Authors
//
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

#include <set>
#include <string>
#include <vector>

#include "designprobe/common/error.h"
#include "designprobe/common/hash.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "gtest/gtest.h"

namespace designprobe {
namespace {

TEST(HashTest, KnownFnvVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(HashTest, HexDigits) {
  EXPECT_EQ(ToHex(0xabcULL, 8), "00000abc");
  EXPECT_EQ(ToHex(0x1234567890abcdefULL, 4), "cdef");
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngTest, DerivedSeedsDependOnLabel) {
  EXPECT_EQ(DeriveSeed(1, "x"), DeriveSeed(1, "x"));
  EXPECT_NE(DeriveSeed(1, "x"), DeriveSeed(1, "y"));
  EXPECT_NE(DeriveSeed(1, "x"), DeriveSeed(2, "x"));
}

TEST(RngTest, BelowStaysInRange) {
  Rng r(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = r.Below(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(RngTest, SampleIndicesAreDistinct) {
  Rng r(11);
  for (std::size_t k = 0; k <= 10; ++k) {
    const auto idx = r.SampleIndices(10, k);
    ASSERT_EQ(idx.size(), k);
    std::set<std::size_t> seen(idx.begin(), idx.end());
    EXPECT_EQ(seen.size(), k);
    for (auto i : idx) EXPECT_LT(i, 10u);
  }
  EXPECT_EQ(r.SampleIndices(3, 9).size(), 3u);
}

TEST(RngTest, ShuffleIsAPermutation) {
  Rng r(3);
  std::vector<int> v = {1, 2, 3, 4, 5, 6};
  r.Shuffle(v);
  std::multiset<int> s(v.begin(), v.end());
  EXPECT_EQ(s, (std::multiset<int>{1, 2, 3, 4, 5, 6}));
}

TEST(TextTest, TrimSplitJoin) {
  EXPECT_EQ(Trim("  a b \n"), "a b");
  EXPECT_EQ(Split("a,,b", ','), (std::vector<std::string>{"a", "", "b"}));
  EXPECT_EQ(Join({"a", "b", "c"}, ", "), "a, b, c");
  EXPECT_TRUE(StartsWith("GeneratedClass", "Gen"));
  EXPECT_TRUE(EndsWith("FooTest", "Test"));
  EXPECT_EQ(SimpleName("com.acme.Foo"), "Foo");
  EXPECT_EQ(SimpleName("Foo"), "Foo");
}

TEST(TextTest, ContainsWordRespectsBoundaries) {
  EXPECT_TRUE(ContainsWord("the Repo class", "Repo"));
  EXPECT_FALSE(ContainsWord("the Repository class", "Repo"));
  EXPECT_TRUE(ContainsWord("Repo.save()", "Repo"));
  EXPECT_FALSE(ContainsWord("myRepo", "Repo"));
  EXPECT_TRUE(ContainsWord("Repository, Repo", "Repo"));
  EXPECT_FALSE(ContainsWord("repo", "Repo"));
  EXPECT_FALSE(ContainsWord("anything", ""));
}

TEST(TextTest, FormatNumberIsShortAndExact) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(3), "3");
  EXPECT_EQ(FormatNumber(30), "30");
  EXPECT_EQ(FormatNumber(26.5), "26.5");
  EXPECT_EQ(FormatNumber(1.0 / 3.0), "0.3333333333333333");
  for (double v : {0.7, 123.456, 1e-9, 2.0 / 3.0, 12345678.0}) {
    EXPECT_EQ(std::stod(FormatNumber(v)), v);
  }
}

TEST(ErrorTest, CarriesCode) {
  const Error e(ErrorCode::kZeroTotal, "x");
  EXPECT_EQ(e.code(), ErrorCode::kZeroTotal);
  const InsufficientDisjointClasses d(5, 2);
  EXPECT_EQ(d.code(), ErrorCode::kInsufficientDisjointClasses);
  EXPECT_EQ(d.wanted(), 5u);
  EXPECT_EQ(d.available(), 2u);
}

}  // namespace
}  // namespace designprobe
