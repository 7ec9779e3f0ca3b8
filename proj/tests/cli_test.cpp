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

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace arrovian::cli {
namespace {

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "aal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

TEST(CliTest, Metric) {
  const CliRun r = run({"metric", "--kind", "kt", "0>1>2", "2>1>0"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "3\n");
  EXPECT_EQ(run({"metric", "--kind", "sf", "0>1>2", "1>2>0"}).out, "4\n");
}

TEST(CliTest, Diameter) {
  const CliRun r = run({"--json", "diameter", "--kind", "sf", "--m", "5"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(json_of(r)["diameter"], 12);
}

TEST(CliTest, WitnessExample) {
  const CliRun r = run({"witness", "--task", "approx", "--n", "4", "--t", "2", "--sync", "sync",
                     "--m", "4", "--eps", "3", "--metric", "kt"});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  const CliRun j = run({"--json", "witness", "--task", "approx", "--n", "4", "--t", "2", "--sync",
                     "sync", "--m", "4", "--eps", "3", "--metric", "kt"});
  EXPECT_EQ(json_of(j)["verdict"], "verified");
  EXPECT_EQ(json_of(j)["witness"]["distance"], 4);

  const CliRun na = run({"--json", "witness", "--task", "approx", "--n", "4", "--t", "2", "--m",
                      "4", "--eps", "4"});
  EXPECT_EQ(na.status, kExitFailed);
  EXPECT_EQ(json_of(na)["verdict"], "not-applicable");
}

TEST(CliTest, VerifyWitnessFile) {
  const CliRun made = run({"--json", "witness", "--task", "kset", "--n", "4", "--t", "2", "--m",
                        "3", "--k", "2"});
  ASSERT_EQ(made.status, kExitOk);
  const auto dir = std::filesystem::temp_directory_path();
  const std::string good = (dir / "aal_cli_test_good.json").string();
  const std::string bad = (dir / "aal_cli_test_bad.json").string();
  std::ofstream(good) << made.out;
  auto doc = json_of(made);
  doc["profile"][0] = "2>1>0";
  std::ofstream(bad) << doc.dump();

  EXPECT_EQ(run({"verify-witness", good}).status, kExitOk);
  EXPECT_EQ(run({"verify-witness", bad}).status, kExitFailed);
  EXPECT_EQ(run({"verify-witness", (dir / "aal_cli_test_missing.json").string()}).status,
            kExitUsage);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST(CliTest, ArrowVerify) {
  const CliRun r = run({"--json", "arrow-verify"});
  EXPECT_EQ(r.status, kExitOk);
  const auto doc = json_of(r);
  EXPECT_EQ(doc["valid"], 2);
  EXPECT_EQ(doc["dictatorial"], 2);
  EXPECT_EQ(doc["candidates"], 531441);
}

TEST(CliTest, SimulateAndSafeArea) {
  const CliRun sim = run({"--json", "simulate", "--proto", "flood", "--n", "3", "--t", "1",
                       "--sync", "sync", "--profile", "0>1>2,1>2>0,2>0>1", "--task",
                       "approx:1:kt"});
  EXPECT_EQ(sim.status, kExitFailed);
  EXPECT_FALSE(json_of(sim)["verdicts"]["approx"]["passed"].get<bool>());

  const CliRun ok = run({"simulate", "--n", "3", "--t", "1", "--profile", "0>1>2,0>1>2,2>1>0",
                      "--schedule", "3@0:", "--task", "kset:1"});
  EXPECT_EQ(ok.status, kExitOk) << ok.err;

  const CliRun area = run({"--json", "safe-area", "--t", "1", "--profile", "0>1>2,1>2>0,2>0>1",
                        "--i", "2"});
  EXPECT_EQ(area.status, kExitOk);
  EXPECT_EQ(json_of(area)["members"], nlohmann::json::array({"1>2>0"}));
}

TEST(CliTest, CyclicCommands) {
  const CliRun list = run({"--json", "cyclic", "--m", "3", "--blocks", "0|1|2"});
  EXPECT_EQ(list.status, kExitOk);
  const CliRun prof = run({"--json", "cyclic-profile", "--n", "4", "--t", "1", "--m", "3"});
  EXPECT_EQ(prof.status, kExitFailed);
  EXPECT_EQ(run({"cyclic-profile", "--n", "4", "--t", "2", "--m", "3"}).status, kExitOk);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).status, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(run({"metric", "--kind", "kt", "0>1>2"}).status, kExitUsage);
  EXPECT_EQ(run({"metric", "--kind", "kt", "0>1>2", "0>1"}).status, kExitUsage);
  EXPECT_EQ(run({"metric", "--kind", "kt", "0>1>1", "0>1>2"}).status, kExitUsage);
  EXPECT_EQ(run({"diameter", "--kind", "kt", "--m", "0"}).status, kExitUsage);
  EXPECT_EQ(run({"simulate", "--n", "3", "--t", "3", "--profile", "0>1"}).status, kExitUsage);
  EXPECT_EQ(run({"reproduce", "--only", "10"}).status, kExitUsage);
}

TEST(CliTest, JsonIsByteDeterministic) {
  const std::vector<std::string> args = {"--json", "witness", "--task", "approx", "--n", "5",
                                         "--t", "2", "--m", "5", "--eps", "5", "--metric",
                                         "sf"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> shuffled = {"--json", "--seed", "7", "cyclic-profile", "--n",
                                             "5", "--t", "2", "--m", "3", "--shuffle"};
  EXPECT_EQ(run(shuffled).out, run(shuffled).out);
}

}  // namespace
}  // namespace arrovian::cli
