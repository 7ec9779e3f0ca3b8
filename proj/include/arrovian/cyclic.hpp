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

#ifndef ARROVIAN_CYCLIC_HPP_
#define ARROVIAN_CYCLIC_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrovian/prefs.hpp"

namespace arrovian {

enum class Synchrony { kSync, kAsync };

std::string_view to_string(Synchrony s);
/// Accepts "sync" or "async".
Synchrony parse_synchrony(std::string_view text);

/// n processes, at most t of which crash; 1 <= t < n.
struct SystemParams {
  int n;
  int t;

  SystemParams(int n, int t);

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// n for synchronous systems, n - t for asynchronous ones.
int sync_process_number(const SystemParams& p, Synchrony s);

/// Smallest admissible cycle length: ceil(nbar / t).
int min_cycle_length(const SystemParams& p, Synchrony s);

/**
 * Ordered partition of the alternatives into k non-empty blocks, each with a
 * strict internal order. Block i lists its alternatives best first.
 */
class BlockPartition {
 public:
  BlockPartition(int m, std::vector<std::vector<Alternative>> blocks);

  /// m singleton blocks {0}, {1}, ..., {m-1}.
  static BlockPartition singletons(int m);

  int alternative_count() const { return m_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int min_block_size() const;
  const std::vector<std::vector<Alternative>>& blocks() const { return blocks_; }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  int m_;
  std::vector<std::vector<Alternative>> blocks_;
};

/// Parses "0,1|2,3": '|' separates blocks, ',' lists a block best first.
BlockPartition parse_blocks(std::string_view text, int m);
std::string format_blocks(const BlockPartition& bp);

/// R_j ranks the blocks X_j, X_{j+1}, ..., X_k, X_1, ..., X_{j-1}.
std::vector<Preference> cyclic_preference_list(const BlockPartition& bp);

/// Round-robin equitable partition of slots 0..nbar-1 into k sets; slot s
/// goes to set s mod k. Sets are empty when k > nbar.
std::vector<std::vector<int>> equitable_partition(int nbar, int k);

/// Slot s receives list entry list_order[s mod k] (identity by default).
Profile cyclic_profile(const BlockPartition& bp, int nbar);
Profile cyclic_profile(const BlockPartition& bp, int nbar,
                       std::span<const int> list_order);

/// A block partition whose cyclic list, spread over some equitable partition
/// of the slots, yields `profile`; nullopt if none exists for this k.
std::optional<BlockPartition> match_cyclic_profile(const Profile& profile, int k);

/// Least k with ceil(nbar/t) <= k <= m such that `profile` is k-cyclic.
/// Throws ArgumentError when |profile| != nbar, CapacityError when m exceeds
/// the strict enumeration cap.
std::optional<int> in_cyclic_family(const Profile& profile, const SystemParams& p,
                                    Synchrony s);

}  // namespace arrovian

#endif  // ARROVIAN_CYCLIC_HPP_
