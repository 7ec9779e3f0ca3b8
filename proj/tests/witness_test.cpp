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

#include "arrovian/witness.hpp"

#include <set>
#include <variant>

#include "arrovian/errors.hpp"
#include "arrovian/metrics.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace arrovian {
namespace {

using testing::Gen;

WitnessReport report_of(const WitnessOutcome& o) {
  EXPECT_TRUE(std::holds_alternative<WitnessReport>(o))
      << std::get<NotApplicable>(o).precondition;
  return std::holds_alternative<WitnessReport>(o) ? std::get<WitnessReport>(o) : WitnessReport{};
}

bool not_applicable(const WitnessOutcome& o) { return std::holds_alternative<NotApplicable>(o); }

TEST(ThresholdTest, Formulas) {
  EXPECT_EQ(approx_threshold(4, 1, MetricKind::kKendallTau), 4);
  EXPECT_EQ(approx_threshold(4, 2, MetricKind::kKendallTau), 16);
  EXPECT_EQ(approx_threshold(3, 1, MetricKind::kSpearmanFootrule), 4);
  EXPECT_EQ(approx_threshold(5, 3, MetricKind::kSpearmanFootrule), 108);
  EXPECT_THROW(approx_threshold(0, 1, MetricKind::kKendallTau), ArgumentError);
  EXPECT_THROW(approx_threshold(2, 0, MetricKind::kKendallTau), ArgumentError);
}

TEST(ThresholdTest, AgreesWithDiameters) {
  for (int m = 2; m <= 5; ++m) {
    const Domain all = enumerate_strict(m);
    EXPECT_EQ(approx_threshold(m, 1, MetricKind::kSpearmanFootrule),
              diameter(all, MetricKind::kSpearmanFootrule));
    EXPECT_GE(2 * approx_threshold(m, 1, MetricKind::kKendallTau),
              diameter(all, MetricKind::kKendallTau));
  }
}

TEST(KSetWitnessTest, Examples) {
  const WitnessReport r = report_of(kset_witness({4, 2}, Synchrony::kSync, 3, 2));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.witness_value, 3);
  EXPECT_EQ(std::set<int>(r.witness_slots.begin(), r.witness_slots.end()).size(), 3u);
  EXPECT_EQ(r.profile.size(), 4u);
  EXPECT_TRUE(r.weak_output);
  for (std::size_t i = 0; i < r.profile.size(); ++i) {
    ASSERT_EQ(r.safe_areas[i].size(), 1u);
    EXPECT_EQ(r.safe_areas[i][0], r.profile[i]);
  }

  EXPECT_TRUE(not_applicable(kset_witness({4, 1}, Synchrony::kSync, 3, 2)));
  EXPECT_TRUE(not_applicable(kset_witness({4, 2}, Synchrony::kSync, 3, 3)));
  EXPECT_TRUE(not_applicable(kset_witness({3, 2}, Synchrony::kSync, 5, 3)));
}

TEST(KSetWitnessTest, AsyncUsesAllSlotsWhenNeeded) {
  const WitnessReport r = report_of(kset_witness({4, 2}, Synchrony::kAsync, 3, 2));
  EXPECT_EQ(r.synchrony, Synchrony::kAsync);
  EXPECT_EQ(r.profile_synchrony, Synchrony::kSync);
  EXPECT_EQ(r.profile.size(), 4u);
  EXPECT_TRUE(r.verified);

  const WitnessReport small = report_of(kset_witness({5, 1}, Synchrony::kAsync, 4, 2));
  EXPECT_EQ(small.profile_synchrony, Synchrony::kAsync);
  EXPECT_EQ(small.profile.size(), 4u);
}

TEST(ApproxWitnessTest, Examples) {
  const WitnessReport& r =
      report_of(approx_witness({4, 2}, Synchrony::kSync, 4, MetricKind::kKendallTau, Rational(3)));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.threshold, 4);
  EXPECT_EQ(r.witness_value, 4);
  ASSERT_EQ(r.witness_slots.size(), 2u);
  EXPECT_EQ(kendall_tau(r.profile[r.witness_slots[0]], r.profile[r.witness_slots[1]]), 4);
  EXPECT_EQ(r.delta_bound, Rational(3));

  EXPECT_TRUE(not_applicable(
      approx_witness({4, 2}, Synchrony::kSync, 4, MetricKind::kKendallTau, Rational(4))));
  EXPECT_TRUE(not_applicable(
      approx_witness({6, 1}, Synchrony::kAsync, 4, MetricKind::kKendallTau, Rational(1))));

  const WitnessReport sf = report_of(
      approx_witness({3, 1}, Synchrony::kSync, 3, MetricKind::kSpearmanFootrule, Rational(7, 2)));
  EXPECT_EQ(sf.threshold, 4);
  EXPECT_EQ(sf.witness_value, 4);
  EXPECT_FALSE(sf.delta_bound.has_value());
}

TEST(BlockWitnessTest, Examples) {
  const BlockPartition pairs = parse_blocks("0,1|2,3|4,5|6,7", 8);
  const WitnessReport& r =
      report_of(block_witness({4, 2}, Synchrony::kSync, pairs, MetricKind::kKendallTau,
                              Rational(15)));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.j, 4);
  EXPECT_EQ(r.ell, 2);
  EXPECT_EQ(r.threshold, 16);
  EXPECT_EQ(r.witness_value, 16);
  EXPECT_EQ(r.delta, Rational(1));
  ASSERT_TRUE(r.delta_bound.has_value());
  // diam_KT(L(8)) counts all 28 pairs.
  EXPECT_EQ(*r.delta_bound * 2, Rational(8 * 7 / 2));

  // One block of size 1 lowers ell and delta.
  const WitnessReport uneven = report_of(block_witness(
      {4, 2}, Synchrony::kSync, parse_blocks("0|1,2|3,4|5,6", 7), MetricKind::kKendallTau,
      Rational(3)));
  EXPECT_EQ(uneven.ell, 1);
  EXPECT_EQ(uneven.delta, Rational(4, 7));

  EXPECT_TRUE(not_applicable(block_witness({5, 1}, Synchrony::kSync, pairs,
                                           MetricKind::kKendallTau, Rational(1))));
}

TEST(VerifyWitnessTest, Examples) {
  const WitnessReport r = std::get<WitnessReport>(
      approx_witness({4, 2}, Synchrony::kSync, 4, MetricKind::kKendallTau, Rational(3)));
  const WitnessVerdict ok = verify_witness(r);
  EXPECT_TRUE(ok.verified) << ok.reason;

  WitnessReport boundary = r;
  boundary.eps = Rational(boundary.threshold);
  const WitnessVerdict failed = verify_witness(boundary);
  EXPECT_FALSE(failed.verified);
  EXPECT_FALSE(failed.reason.empty());

  WitnessReport tampered = r;
  tampered.profile[0] = parse_pref("3>2>1>0");
  EXPECT_THROW(verify_witness(tampered), IntegrityError);

  WitnessReport wrong_threshold = r;
  wrong_threshold.threshold += 1;
  EXPECT_THROW(verify_witness(wrong_threshold), IntegrityError);
}

TEST(VerifyWitnessTest, EveryProducedReportVerifies) {
  Gen gen;
  int produced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int t = gen.uniform(1, 2);
    const SystemParams p(gen.uniform(t + 1, 6), t);
    const Synchrony s = gen.uniform(0, 1) ? Synchrony::kSync : Synchrony::kAsync;
    const int m = gen.uniform(2, 6);
    WitnessOutcome o;
    if (gen.uniform(0, 1)) {
      o = kset_witness(p, s, m, gen.uniform(1, m));
    } else {
      const MetricKind kind =
          gen.uniform(0, 1) ? MetricKind::kKendallTau : MetricKind::kSpearmanFootrule;
      o = approx_witness(p, s, m, kind, Rational(gen.uniform(0, 20), 2));
    }
    if (not_applicable(o)) continue;
    ++produced;
    const WitnessReport& r = std::get<WitnessReport>(o);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(verify_witness(r).verified);
  }
  EXPECT_GT(produced, 20);
}

TEST(TaskKindTest, Names) {
  EXPECT_EQ(parse_task_kind("approx"), TaskKind::kApprox);
  EXPECT_EQ(to_string(TaskKind::kKSet), "kset");
  EXPECT_THROW(parse_task_kind("renaming"), ArgumentError);
}

}  // namespace
}  // namespace arrovian
