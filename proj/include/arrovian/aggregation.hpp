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

#ifndef ARROVIAN_AGGREGATION_HPP_
#define ARROVIAN_AGGREGATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "arrovian/metrics.hpp"
#include "arrovian/prefs.hpp"
#include "arrovian/rational.hpp"

namespace arrovian {

/// Largest |W_I|^n an explicit map may tabulate.
inline constexpr std::size_t kMaxProfileSpace = 4'000'000;

/// Unordered pair a < b. Pairs of m alternatives are indexed in
/// lexicographic order: (0,1), (0,2), ..., (m-2,m-1).
struct AlternativePair {
  Alternative first;
  Alternative second;
};

std::vector<AlternativePair> all_pairs(int m);

/// Weak order whose pair orders are exactly `orders` (indexed as
/// all_pairs(m)), or nullopt when no weak order induces them.
std::optional<Preference> preference_from_pair_orders(
    int m, std::span<const PairOrder> orders);

/// Number of profiles in `domain`^n; throws CapacityError above
/// kMaxProfileSpace.
std::size_t profile_space_size(const Domain& domain, int n);
/// Profile with index `index` in the lexicographic enumeration of
/// `domain`^n (slot 0 most significant).
Profile profile_at(const Domain& domain, int n, std::size_t index);

/**
 * Output rule for one output slot in IIA form.
 *
 * For each unordered pair the rule maps the tuple of per-slot input pair
 * orders (encoded base 3, slot 0 most significant) to an output pair order.
 * Entries default to kTie.
 */
class PairRule {
 public:
  PairRule(int m, int n_slots);

  int alternative_count() const { return m_; }
  int slot_count() const { return n_slots_; }
  std::size_t keys_per_pair() const { return keys_per_pair_; }

  static std::size_t key_of(std::span<const PairOrder> per_slot);

  PairOrder get(std::size_t pair_index, std::size_t key) const;
  void set(std::size_t pair_index, std::size_t key, PairOrder out);

  /// nullopt when the induced relation on `profile` is not a weak order.
  std::optional<Preference> evaluate(const Profile& profile) const;

 private:
  int m_;
  int n_slots_;
  std::size_t keys_per_pair_;
  std::vector<PairOrder> table_;
};

/**
 * A map from W_I^n to W_O^n, stored as an explicit table over the
 * lexicographic enumeration of W_I^n.
 */
class AggregationMap {
 public:
  using Function = std::function<Profile(const Profile&)>;

  /// Evaluates `f` on every input profile. Outputs must lie in W_O^n.
  static AggregationMap tabulate(int n_slots, Domain input, Domain output,
                                 const Function& f);
  /// Builds from one PairRule per output slot. Throws VerificationError if
  /// some rule yields a non-weak-order on some input profile.
  static AggregationMap from_pair_rules(Domain input, Domain output,
                                        std::vector<PairRule> rules);

  int slot_count() const { return n_slots_; }
  const Domain& input_domain() const { return input_; }
  const Domain& output_domain() const { return output_; }
  std::size_t profile_count() const { return outputs_.size(); }
  Profile input_profile(std::size_t index) const;
  const Profile& output(std::size_t index) const { return outputs_.at(index); }
  const Profile& apply(const Profile& input) const;

  /// Present when built from pair rules.
  const std::optional<std::vector<PairRule>>& pair_rules() const { return rules_; }

  /// Same table over a different declared output domain; every output must
  /// belong to it.
  AggregationMap with_output_domain(Domain output) const;

 private:
  AggregationMap(int n_slots, Domain input, Domain output)
      : n_slots_(n_slots), input_(std::move(input)), output_(std::move(output)) {}

  int n_slots_;
  Domain input_;
  Domain output_;
  std::vector<Profile> outputs_;
  std::optional<std::vector<PairRule>> rules_;
};

/// Witness of a failed property check. Slots are 0-based.
struct Counterexample {
  Profile input;
  Profile output;
  /// Second profile for two-profile properties (IIA).
  std::optional<Profile> other_input;
  std::optional<Profile> other_output;
  /// Ordered pair (a, b): the property required a strictly above b, or the
  /// pair on which two outputs disagree.
  std::optional<std::pair<Alternative, Alternative>> pair;
  std::optional<int> slot;
};

struct CheckResult {
  bool holds = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return holds; }
};

CheckResult check_unanimity(const AggregationMap& f);
CheckResult check_iia(const AggregationMap& f);
/// Throws ArgumentError when k < 1.
CheckResult check_k_set(const AggregationMap& f, int k);
/// Throws DomainError unless the declared output domain is strict.
CheckResult check_eps_agreement(const AggregationMap& f, const Rational& eps,
                                MetricKind kind);

/// Inclusion-minimal decisive sets, each a sorted list of 0-based slots,
/// ordered by size then lexicographically.
std::vector<std::vector<int>> find_decisive_sets(const AggregationMap& f);
bool is_k_dictatorship(const AggregationMap& f, int k);

/// delta[j] is the input slot whose strict pairs output slot j reproduces.
struct DictatorAssignment {
  std::vector<int> delta;

  friend bool operator==(const DictatorAssignment&, const DictatorAssignment&) = default;
};

/// Throws VerificationError when some output slot has no dictating input.
DictatorAssignment coordinate_dictators(const AggregationMap& f);

/// Result of the exhaustive IIA pair-rule enumeration at n = 2, m = 3.
struct ArrowEnumeration {
  std::uint64_t candidates = 0;
  /// Candidates inducing a weak order on every input profile.
  std::uint64_t weak_order_valid = 0;
  /// Of those, the ones that also satisfy unanimity.
  std::uint64_t valid = 0;
  std::uint64_t dictatorial = 0;
  /// One consensus map (the rule copied to both output slots) per valid rule.
  std::vector<PairRule> rules;
  std::vector<AggregationMap> maps;
  std::vector<std::vector<std::vector<int>>> decisive_sets;
};

/// Only (n_slots, m) = (2, 3) is supported; anything else is a
/// CapacityError.
ArrowEnumeration enumerate_arrow_maps(int n_slots = 2, int m = 3);

struct PerfectSyncReport {
  /// Unanimity + IIA maps L(3)^2 -> P(3)^2, one per dictator assignment.
  std::vector<AggregationMap> maps;
  std::vector<DictatorAssignment> assignments;
  std::vector<bool> unanimity_and_iia;
  /// Indices into `maps`.
  std::vector<std::size_t> consensus;
  std::vector<std::size_t> consensus_dictatorial;
  /// Indices surviving eps-agreement for every tested eps below the
  /// metric's diameter on L(3).
  std::vector<std::size_t> kt_agreeing;
  std::vector<std::size_t> sf_agreeing;
  std::vector<Rational> kt_eps_tested;
  std::vector<Rational> sf_eps_tested;
  bool passed = false;
};

PerfectSyncReport verify_perfect_sync_props();

}  // namespace arrovian

#endif  // ARROVIAN_AGGREGATION_HPP_
