// Copyright 2026 The Arrovian Agreement Authors
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

#include "arrovian/prefs.hpp"

#include <set>
#include <vector>

#include "arrovian/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace arrovian {
namespace {

using testing::Gen;
using testing::kPropertyTrials;

// Ordered Bell numbers by brute force: every map {0..m-1} -> {0..m-1} whose
// image is contiguous from 0 is exactly one weak order.
std::size_t weak_order_count_oracle(int m) {
  std::size_t count = 0;
  std::vector<int> levels(m, 0);
  while (true) {
    std::set<int> image(levels.begin(), levels.end());
    if (*image.rbegin() + 1 == static_cast<int>(image.size())) ++count;
    int pos = 0;
    while (pos < m && levels[pos] == m - 1) levels[pos++] = 0;
    if (pos == m) break;
    ++levels[pos];
  }
  return count;
}

TEST(PreferenceTest, ParsesGroupsIntoLevels) {
  EXPECT_EQ(parse_pref("0>1=2>3").levels(), (std::vector<int>{0, 1, 1, 2}));
  EXPECT_EQ(parse_pref("2>0>1").levels(), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(parse_pref(" 1 = 0 > 2 ").levels(), (std::vector<int>{0, 0, 1}));
}

TEST(PreferenceTest, RejectsMalformedText) {
  EXPECT_THROW(parse_pref("0>0>1"), ParseError);
  EXPECT_THROW(parse_pref("0>>1"), ParseError);
  EXPECT_THROW(parse_pref(""), ParseError);
  EXPECT_THROW(parse_pref("0>1", AlternativeSet(3)), ParseError);
  EXPECT_THROW(parse_pref("0>x", AlternativeSet(2)), ParseError);
}

TEST(PreferenceTest, ParseErrorCarriesPosition) {
  try {
    parse_pref("0>1>1");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(PreferenceTest, FormatRoundTrips) {
  Gen gen;
  for (int trial = 0; trial < kPropertyTrials; ++trial) {
    const Preference p = gen.weak(gen.uniform(1, 7));
    EXPECT_EQ(parse_pref(format_pref(p), AlternativeSet(p.size())), p);
  }
}

TEST(PreferenceTest, CustomNames) {
  const AlternativeSet names({"a", "b", "c"});
  const Preference p = parse_pref("c>a=b", names);
  EXPECT_EQ(p.levels(), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(format_pref(p, names), "c>a=b");
  EXPECT_THROW(AlternativeSet({"a", "a"}), ArgumentError);
  EXPECT_THROW(AlternativeSet({"a>b"}), ArgumentError);
}

TEST(PreferenceTest, FromLevelsValidates) {
  EXPECT_NO_THROW(Preference::from_levels({0, 1, 1}));
  EXPECT_THROW(Preference::from_levels({0, 2, 2}), ArgumentError);
  EXPECT_THROW(Preference::from_levels({1, 1}), ArgumentError);
  const int raw[] = {5, 9, 5};
  EXPECT_EQ(Preference::canonicalize(raw).levels(), (std::vector<int>{0, 1, 0}));
}

TEST(PreferenceTest, StrictPreference) {
  EXPECT_TRUE(strictly_prefers(parse_pref("0>1>2"), 0, 2));
  EXPECT_FALSE(strictly_prefers(parse_pref("0=1>2"), 0, 1));
  EXPECT_TRUE(strictly_prefers(parse_pref("1>2>0"), 2, 0));
  EXPECT_TRUE(weakly_prefers(parse_pref("0=1>2"), 1, 0));
  EXPECT_EQ(pair_order(parse_pref("0=1>2"), 0, 1), PairOrder::kTie);
  EXPECT_EQ(pair_order(parse_pref("2>0>1"), 0, 2), PairOrder::kBelow);
}

TEST(PreferenceTest, Restriction) {
  const std::vector<Alternative> y1 = {1, 2, 3};
  EXPECT_EQ(format_pref(restrict(parse_pref("0>1=2>3"), y1)), "0=1>2");
  const std::vector<Alternative> y2 = {0, 1};
  EXPECT_EQ(format_pref(restrict(parse_pref("2>0>1"), y2)), "0>1");
  EXPECT_EQ(format_pref(restrict(parse_pref("0>1"), y2)), "0>1");
}

TEST(PreferenceTest, RestrictionPreservesPairOrders) {
  Gen gen;
  for (int trial = 0; trial < kPropertyTrials; ++trial) {
    const int m = gen.uniform(2, 7);
    const Preference p = gen.weak(m);
    std::vector<Alternative> subset;
    for (Alternative a = 0; a < m; ++a) {
      if (gen.uniform(0, 1)) subset.push_back(a);
    }
    if (subset.empty()) continue;
    const Preference r = restrict(p, subset);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = 0; j < subset.size(); ++j) {
        EXPECT_EQ(pair_order(r, static_cast<int>(i), static_cast<int>(j)),
                  pair_order(p, subset[i], subset[j]));
      }
    }
  }
}

TEST(PreferenceTest, Rank) {
  EXPECT_EQ(rank(parse_pref("0>1>2"), 0), 1);
  EXPECT_EQ(rank(parse_pref("0>1>2"), 2), 3);
  EXPECT_EQ(rank(parse_pref("1>2>0"), 2), 2);
  EXPECT_THROW(rank(parse_pref("0=1>2"), 0), DomainError);
}

TEST(PreferenceTest, RankingListsBestFirst) {
  EXPECT_EQ(parse_pref("2>0>1").ranking(), (std::vector<Alternative>{2, 0, 1}));
  const std::vector<Alternative> ranking = {3, 1, 0, 2};
  EXPECT_EQ(Preference::from_ranking(ranking).ranking(), ranking);
}

TEST(DomainTest, StrictEnumeration) {
  const Domain two = enumerate_strict(2);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(two.contains(parse_pref("0>1")));
  EXPECT_TRUE(two.contains(parse_pref("1>0")));
  EXPECT_EQ(enumerate_strict(3).size(), 6u);
  EXPECT_EQ(enumerate_strict(4).size(), 24u);
  EXPECT_EQ(enumerate_strict(8).size(), 40320u);
  EXPECT_TRUE(enumerate_strict(5).all_strict());
  EXPECT_THROW(enumerate_strict(9), CapacityError);
  EXPECT_THROW(enumerate_strict(0), CapacityError);
}

TEST(DomainTest, WeakEnumerationMatchesOracle) {
  EXPECT_EQ(enumerate_weak(2).size(), 3u);
  EXPECT_EQ(enumerate_weak(3).size(), 13u);
  EXPECT_EQ(enumerate_weak(4).size(), 75u);
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(enumerate_weak(m).size(), weak_order_count_oracle(m)) << "m=" << m;
  }
  EXPECT_THROW(enumerate_weak(7), CapacityError);
}

TEST(DomainTest, SortedAndDeduplicated) {
  const Domain d(3, {parse_pref("2>1>0"), parse_pref("0>1>2"), parse_pref("2>1>0")});
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(d[0] < d[1]);
  EXPECT_EQ(d.index_of(parse_pref("2>1>0")), std::optional<std::size_t>(1));
  EXPECT_EQ(d.index_of(parse_pref("1>0>2")), std::nullopt);
  EXPECT_THROW(Domain(3, {parse_pref("0>1")}), ArgumentError);
}

TEST(DomainTest, NonTriviality) {
  EXPECT_TRUE(is_non_trivial(Domain(2, {parse_pref("0>1"), parse_pref("1>0")})));
  EXPECT_FALSE(is_non_trivial(Domain(3, {parse_pref("0>1>2")})));
  EXPECT_FALSE(is_non_trivial(Domain(3, {parse_pref("0=1>2"), parse_pref("0>1=2")})));
}

TEST(ProfileTest, ParseAndFormat) {
  const Profile p = parse_profile("0>1>2, 2>1>0,1=0>2");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(format_profile(p), "0>1>2,2>1>0,0=1>2");
  EXPECT_EQ(profile_alternative_count(p), 3);
  EXPECT_THROW(parse_profile("0>1,0>1>2"), ArgumentError);
  EXPECT_THROW(parse_profile("0>1,"), ParseError);
}

}  // namespace
}  // namespace arrovian
