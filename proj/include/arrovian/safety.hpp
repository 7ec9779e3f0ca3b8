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

#ifndef ARROVIAN_SAFETY_HPP_
#define ARROVIAN_SAFETY_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arrovian/aggregation.hpp"
#include "arrovian/cyclic.hpp"
#include "arrovian/prefs.hpp"

namespace arrovian {

/// Largest index set safe_area will enumerate subsets of.
inline constexpr int kMaxSafeAreaSlots = 10;

/// Ordered pairs (a, b) meaning "a must be strictly above b".
class ConstraintSet {
 public:
  explicit ConstraintSet(int m);

  int alternative_count() const { return m_; }
  void add(Alternative a, Alternative b);
  bool contains(Alternative a, Alternative b) const;
  /// Adds every pair of `other`.
  void merge(const ConstraintSet& other);
  /// False when some pair and its reverse are both present.
  bool consistent() const;
  bool satisfied_by(const Preference& p) const;
  std::vector<std::pair<Alternative, Alternative>> pairs() const;

 private:
  int m_;
  std::vector<bool> required_;
};

/// Pairs strictly ordered the same way by every member of `members`.
ConstraintSet unanimous_pairs(std::span<const Preference> members);

/// Members of `output` that keep every unanimous strict pair of `members`.
std::vector<Preference> unanimity_set(std::span<const Preference> members,
                                      const Domain& output);

/**
 * Safe area of slot `i` within the indexed set `members` (indices 0..|J|-1).
 *
 * Intersects the unanimity sets of all subsets of size |J| - t that contain
 * i. Throws ArgumentError unless t < |J| and i is a valid index, and
 * CapacityError beyond kMaxSafeAreaSlots. May return an empty set.
 */
std::vector<Preference> safe_area(std::span<const Preference> members, int i, int t,
                                  const Domain& output);

/// Counterexample carries (input, output, pair (a, b), slot i).
CheckResult check_u_unanimity(const AggregationMap& f, int u);

struct CyclicSafetyVerdict {
  bool passed = true;
  int k = 0;
  BlockPartition blocks;
  std::optional<int> violating_slot;
  std::vector<Preference> violating_area;
};

/// Checks safe_area(profile, i, t, W_O) == {R_i} ∩ W_O for every slot.
/// Throws ArgumentError if `profile` is not in the cyclic family.
CyclicSafetyVerdict verify_cyclic_safe(const Profile& profile, const SystemParams& p,
                                       Synchrony s, const Domain& output);

}  // namespace arrovian

#endif  // ARROVIAN_SAFETY_HPP_
