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

#include "arrovian/json_io.hpp"

#include "arrovian/errors.hpp"
#include "gtest/gtest.h"

namespace arrovian {
namespace {

WitnessReport sample_approx() {
  return std::get<WitnessReport>(
      approx_witness({4, 2}, Synchrony::kSync, 4, MetricKind::kKendallTau, Rational(5, 2)));
}

TEST(WitnessJsonTest, RoundTrip) {
  const WitnessReport approx = sample_approx();
  EXPECT_EQ(witness_from_json(to_json(approx)), approx);
  EXPECT_EQ(witness_from_json(Json::parse(to_json(approx).dump())), approx);

  const WitnessReport kset =
      std::get<WitnessReport>(kset_witness({4, 2}, Synchrony::kAsync, 3, 2));
  EXPECT_EQ(witness_from_json(to_json(kset)), kset);

  const WitnessReport blocks = std::get<WitnessReport>(
      block_witness({4, 2}, Synchrony::kSync, parse_blocks("0,1|2,3|4,5|6,7", 8),
                    MetricKind::kSpearmanFootrule, Rational(31)));
  EXPECT_EQ(witness_from_json(to_json(blocks)), blocks);
}

TEST(WitnessJsonTest, Schema) {
  const Json doc = to_json(sample_approx());
  for (const char* key : {"params", "j", "ell", "delta", "delta_bound", "blocks", "threshold",
                          "profile", "safe_areas", "witness", "verdict"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["params"]["eps"], "5/2");
  EXPECT_EQ(doc["params"]["metric"], "kt");
  EXPECT_EQ(doc["params"]["output_domain"], "strict");
  EXPECT_EQ(doc["verdict"], "verified");
  EXPECT_EQ(doc["witness"]["distance"], 4);
  EXPECT_EQ(doc["profile"][0], "0>1>2>3");
  // Slots are 1-based on the wire.
  for (const auto& slot : doc["witness"]["slots"]) EXPECT_GE(slot.get<int>(), 1);

  const Json na = to_json(NotApplicable{"k < min(m, n)"});
  EXPECT_EQ(na["verdict"], "not-applicable");
}

TEST(WitnessJsonTest, MalformedDocuments) {
  EXPECT_THROW(witness_from_json(Json::parse("{}")), ParseError);
  Json doc = to_json(sample_approx());
  doc["params"]["eps"] = "x";
  EXPECT_THROW(witness_from_json(doc), ParseError);
  doc = to_json(sample_approx());
  doc["profile"][1] = "0>0>1>2";
  EXPECT_THROW(witness_from_json(doc), ParseError);
}

TEST(SimulateJsonTest, Keys) {
  const FloodDecide flood(enumerate_strict(3));
  const auto trace =
      run_sync(flood, parse_profile("0>1>2,1>2>0,2>0>1"), parse_schedule("3@0:"), {3, 1});
  const Json doc = simulate_json(trace, KSetTask{1});
  EXPECT_EQ(doc["correct_set"], Json::array({1, 2}));
  EXPECT_EQ(doc["schedule"], "3@0:");
  EXPECT_TRUE(doc["decisions"].contains("1"));
  EXPECT_FALSE(doc["decisions"].contains("3"));
  EXPECT_TRUE(doc["verdicts"]["unanimity"]["passed"].get<bool>());
  EXPECT_FALSE(doc["verdicts"]["kset"].is_null());
  EXPECT_TRUE(doc["verdicts"]["approx"].is_null());
}

}  // namespace
}  // namespace arrovian
