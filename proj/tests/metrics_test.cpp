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

#include "arrovian/metrics.hpp"

#include <cstdlib>

#include "arrovian/errors.hpp"
#include "arrovian/prefs.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace arrovian {
namespace {

using testing::Gen;
using testing::kPropertyTrials;

std::int64_t discordant_pairs_oracle(const Preference& r, const Preference& s) {
  std::int64_t count = 0;
  for (int a = 0; a < r.size(); ++a) {
    for (int b = a + 1; b < r.size(); ++b) {
      if (strictly_prefers(r, a, b) != strictly_prefers(s, a, b)) ++count;
    }
  }
  return count;
}

std::int64_t footrule_oracle(const Preference& r, const Preference& s) {
  std::int64_t sum = 0;
  for (int a = 0; a < r.size(); ++a) sum += std::abs(rank(r, a) - rank(s, a));
  return sum;
}

TEST(KendallTauTest, Examples) {
  EXPECT_EQ(kendall_tau(parse_pref("0>1>2"), parse_pref("0>1>2")), 0);
  EXPECT_EQ(kendall_tau(parse_pref("0>1>2"), parse_pref("2>1>0")), 3);
  EXPECT_EQ(kendall_tau(parse_pref("0>1>2"), parse_pref("1>2>0")), 2);
}

TEST(SpearmanFootruleTest, Examples) {
  EXPECT_EQ(spearman_footrule(parse_pref("1>0>2"), parse_pref("1>0>2")), 0);
  EXPECT_EQ(spearman_footrule(parse_pref("0>1>2"), parse_pref("2>1>0")), 4);
  EXPECT_EQ(spearman_footrule(parse_pref("0>1>2"), parse_pref("1>2>0")), 4);
}

TEST(MetricTest, RejectsWeakOrdersAndMismatchedSizes) {
  EXPECT_THROW(kendall_tau(parse_pref("0=1>2"), parse_pref("0>1>2")), DomainError);
  EXPECT_THROW(spearman_footrule(parse_pref("0>1>2"), parse_pref("0=1=2")), DomainError);
  EXPECT_THROW(kendall_tau(parse_pref("0>1"), parse_pref("0>1>2")), ArgumentError);
}

TEST(MetricTest, MatchesOraclesOnRandomPairs) {
  Gen gen;
  for (int trial = 0; trial < kPropertyTrials; ++trial) {
    const int m = gen.uniform(1, 9);
    const Preference r = gen.strict(m);
    const Preference s = gen.strict(m);
    EXPECT_EQ(kendall_tau(r, s), discordant_pairs_oracle(r, s));
    EXPECT_EQ(spearman_footrule(r, s), footrule_oracle(r, s));
  }
}

TEST(MetricTest, AxiomsHoldExhaustively) {
  for (MetricKind kind : {MetricKind::kKendallTau, MetricKind::kSpearmanFootrule}) {
    for (int m = 1; m <= 4; ++m) {
      const Domain all = enumerate_strict(m);
      for (const auto& x : all) {
        for (const auto& y : all) {
          const auto dxy = distance(kind, x, y);
          ASSERT_EQ(dxy, distance(kind, y, x));
          ASSERT_EQ(dxy == 0, x == y);
          for (const auto& z : all) ASSERT_LE(distance(kind, x, z), dxy + distance(kind, y, z));
        }
      }
    }
  }
}

TEST(MetricTest, FootruleBetweenOnceAndTwiceKendall) {
  for (int m = 1; m <= 4; ++m) {
    const Domain all = enumerate_strict(m);
    for (const auto& x : all) {
      for (const auto& y : all) {
        const auto kt = kendall_tau(x, y);
        const auto sf = spearman_footrule(x, y);
        EXPECT_LE(kt, sf);
        EXPECT_LE(sf, 2 * kt);
      }
    }
  }
}

TEST(DiameterTest, FullDomain) {
  const std::int64_t kt[] = {1, 3, 6, 10};
  const std::int64_t sf[] = {2, 4, 8, 12};
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(diameter(enumerate_strict(m), MetricKind::kKendallTau), kt[m - 2]);
    EXPECT_EQ(diameter(enumerate_strict(m), MetricKind::kSpearmanFootrule), sf[m - 2]);
  }
  EXPECT_EQ(diameter(Domain(3, {parse_pref("0>2>1")}), MetricKind::kKendallTau), 0);
}

TEST(DiameterTest, Profiles) {
  EXPECT_EQ(profile_diameter(parse_profile("0>1>2,0>1>2"), MetricKind::kKendallTau), 0);
  EXPECT_EQ(profile_diameter(parse_profile("0>1>2,2>1>0,0>1>2"), MetricKind::kKendallTau), 3);
  EXPECT_EQ(profile_diameter(parse_profile("0>1>2,1>2>0,2>0>1"), MetricKind::kKendallTau), 2);
  EXPECT_THROW(profile_diameter({}, MetricKind::kKendallTau), ArgumentError);
}

TEST(MetricKindTest, ParsesNames) {
  EXPECT_EQ(parse_metric_kind("kt"), MetricKind::kKendallTau);
  EXPECT_EQ(parse_metric_kind("sf"), MetricKind::kSpearmanFootrule);
  EXPECT_EQ(to_string(MetricKind::kSpearmanFootrule), "sf");
  EXPECT_THROW(parse_metric_kind("cayley"), ArgumentError);
}

}  // namespace
}  // namespace arrovian
