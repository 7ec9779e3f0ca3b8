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

#include "arrovian/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "arrovian/errors.hpp"
#include "arrovian/metrics.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace arrovian {
namespace {

using testing::Gen;

Profile prefs(const char* text) { return parse_profile(text); }

// Random block partition of a random permutation of 0..m-1 into k blocks.
BlockPartition random_blocks(Gen& gen, int m, int k) {
  std::vector<Alternative> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen.engine());
  std::vector<int> cuts(m - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), gen.engine());
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(m);
  std::vector<std::vector<Alternative>> blocks;
  int start = 0;
  for (int cut : cuts) {
    blocks.emplace_back(perm.begin() + start, perm.begin() + cut);
    start = cut;
  }
  return BlockPartition(m, std::move(blocks));
}

TEST(SystemParamsTest, SyncProcessNumber) {
  EXPECT_EQ(sync_process_number({5, 2}, Synchrony::kSync), 5);
  EXPECT_EQ(sync_process_number({5, 2}, Synchrony::kAsync), 3);
  EXPECT_EQ(sync_process_number({2, 1}, Synchrony::kAsync), 1);
  EXPECT_EQ(min_cycle_length({5, 2}, Synchrony::kSync), 3);
  EXPECT_THROW(SystemParams(3, 3), ArgumentError);
  EXPECT_THROW(SystemParams(3, 0), ArgumentError);
}

TEST(BlockPartitionTest, Validation) {
  EXPECT_THROW(BlockPartition(3, {{0, 1}}), ArgumentError);
  EXPECT_THROW(BlockPartition(3, {{0, 1}, {1, 2}}), ArgumentError);
  EXPECT_THROW(BlockPartition(2, {{0}, {}, {1}}), ArgumentError);
  EXPECT_EQ(parse_blocks("0,1|2,3", 4), BlockPartition(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(format_blocks(parse_blocks("2|0, 1", 3)), "2|0,1");
  EXPECT_THROW(parse_blocks("0||1", 2), ParseError);
  EXPECT_THROW(parse_blocks("0|5", 2), ParseError);
}

TEST(CyclicListTest, Rotations) {
  EXPECT_EQ(cyclic_preference_list(BlockPartition::singletons(3)), prefs("0>1>2,1>2>0,2>0>1"));
  EXPECT_EQ(cyclic_preference_list(BlockPartition(3, {{2, 0, 1}})), prefs("2>0>1"));
  EXPECT_EQ(cyclic_preference_list(parse_blocks("0,1|2,3", 4)), prefs("0>1>2>3,2>3>0>1"));
}

TEST(CyclicListTest, EveryEntryRespectsEveryBlock) {
  Gen gen;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = gen.uniform(1, 8);
    const BlockPartition bp = random_blocks(gen, m, gen.uniform(1, m));
    for (const auto& r : cyclic_preference_list(bp)) {
      for (const auto& block : bp.blocks()) {
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
          EXPECT_TRUE(strictly_prefers(r, block[i], block[i + 1]));
        }
      }
    }
  }
}

TEST(CyclicListTest, HalfwayKendallProductFormula) {
  for (int j = 1; j <= 6; ++j) {
    const auto list = cyclic_preference_list(BlockPartition::singletons(j));
    EXPECT_EQ(kendall_tau(list[0], list[j / 2]), (j / 2) * ((j + 1) / 2));
  }
}

TEST(EquitablePartitionTest, Sizes) {
  auto sizes = [](int nbar, int k) {
    std::vector<std::size_t> out;
    for (const auto& s : equitable_partition(nbar, k)) out.push_back(s.size());
    return out;
  };
  EXPECT_EQ(sizes(5, 3), (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_EQ(sizes(2, 3), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(sizes(4, 2), (std::vector<std::size_t>{2, 2}));
  EXPECT_THROW(equitable_partition(3, 0), ArgumentError);
}

TEST(CyclicProfileTest, RoundRobin) {
  const BlockPartition s3 = BlockPartition::singletons(3);
  EXPECT_EQ(cyclic_profile(s3, 3), prefs("0>1>2,1>2>0,2>0>1"));
  EXPECT_EQ(cyclic_profile(s3, 4), prefs("0>1>2,1>2>0,2>0>1,0>1>2"));
  EXPECT_EQ(cyclic_profile(BlockPartition(3, {{1, 0, 2}}), 3), prefs("1>0>2,1>0>2,1>0>2"));
  const int order[] = {2, 0, 1};
  EXPECT_EQ(cyclic_profile(s3, 3, order), prefs("2>0>1,0>1>2,1>2>0"));
  const int bad[] = {0, 0, 1};
  EXPECT_THROW(cyclic_profile(s3, 3, bad), ArgumentError);
}

TEST(CyclicFamilyTest, Examples) {
  EXPECT_EQ(in_cyclic_family(prefs("0>1>2,1>2>0,2>0>1"), {3, 1}, Synchrony::kSync), 3);
  EXPECT_EQ(in_cyclic_family(prefs("0>1>2,0>1>2,0>1>2"), {3, 1}, Synchrony::kSync),
            std::nullopt);
  EXPECT_EQ(in_cyclic_family(prefs("0>1,1>0"), {2, 1}, Synchrony::kSync), 2);
  EXPECT_THROW(in_cyclic_family(prefs("0>1,1>0"), {3, 1}, Synchrony::kSync), ArgumentError);
  // Asynchronous systems use n - t slots.
  EXPECT_EQ(in_cyclic_family(prefs("0>1,1>0"), {3, 1}, Synchrony::kAsync), 2);
}

TEST(CyclicFamilyTest, RejectsNonCyclicProfiles) {
  // Multiplicities 2 and 1 over two distinct orders: not equitable for k=2.
  EXPECT_EQ(match_cyclic_profile(prefs("0>1>2,0>1>2,0>1>2,1>2>0"), 2), std::nullopt);
  // Distinct orders that are not rotations of one block sequence.
  EXPECT_EQ(match_cyclic_profile(prefs("0>1>2,1>0>2"), 2), std::nullopt);
  EXPECT_EQ(match_cyclic_profile(prefs("0=1>2,0=1>2"), 1), std::nullopt);
}

TEST(CyclicFamilyTest, ConstructorRecognizerRoundTrip) {
  Gen gen;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = gen.uniform(2, 6);
    const int t = gen.uniform(1, 3);
    const int n = gen.uniform(t + 1, 8);
    const SystemParams p(n, t);
    const Synchrony s = gen.uniform(0, 1) ? Synchrony::kSync : Synchrony::kAsync;
    const int nbar = sync_process_number(p, s);
    const int lo = min_cycle_length(p, s);
    if (lo > m) continue;
    const int k = gen.uniform(lo, m);
    const BlockPartition bp = random_blocks(gen, m, k);
    Profile profile = cyclic_profile(bp, nbar);
    ASSERT_TRUE(match_cyclic_profile(profile, k).has_value()) << format_blocks(bp);
    const auto found = in_cyclic_family(profile, p, s);
    ASSERT_TRUE(found.has_value());
    EXPECT_LE(*found, k);
    EXPECT_GE(*found, lo);
    // Any slot permutation keeps the profile cyclic.
    std::shuffle(profile.begin(), profile.end(), gen.engine());
    EXPECT_TRUE(in_cyclic_family(profile, p, s).has_value());
  }
}

TEST(SynchronyTest, Names) {
  EXPECT_EQ(parse_synchrony("async"), Synchrony::kAsync);
  EXPECT_EQ(to_string(Synchrony::kSync), "sync");
  EXPECT_THROW(parse_synchrony("partial"), ArgumentError);
}

}  // namespace
}  // namespace arrovian
