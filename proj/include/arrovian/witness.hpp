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

#ifndef ARROVIAN_WITNESS_HPP_
#define ARROVIAN_WITNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arrovian/cyclic.hpp"
#include "arrovian/metrics.hpp"
#include "arrovian/prefs.hpp"
#include "arrovian/rational.hpp"

namespace arrovian {

enum class TaskKind { kKSet, kApprox };

std::string_view to_string(TaskKind kind);
/// Accepts "kset" or "approx".
TaskKind parse_task_kind(std::string_view text);

struct WitnessReport {
  TaskKind task = TaskKind::kKSet;
  int n = 0;
  int t = 0;
  Synchrony synchrony = Synchrony::kSync;
  /// Synchrony whose process number sizes the profile. Differs from
  /// `synchrony` only for k-set witnesses that need all n slots.
  Synchrony profile_synchrony = Synchrony::kSync;
  int m = 0;
  int k = 0;
  Rational eps;
  MetricKind metric = MetricKind::kKendallTau;
  /// W_O is all weak orders rather than the linear orders.
  bool weak_output = false;

  int j = 0;
  int ell = 0;
  Rational delta;
  std::optional<Rational> delta_bound;
  BlockPartition blocks = BlockPartition::singletons(1);
  Profile profile;
  std::int64_t threshold = 0;
  std::vector<std::vector<Preference>> safe_areas;
  std::vector<int> witness_slots;
  /// Distinct pinned outputs (k-set) or their distance (approx).
  std::int64_t witness_value = 0;
  bool verified = false;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

struct NotApplicable {
  std::string precondition;
};

using WitnessOutcome = std::variant<WitnessReport, NotApplicable>;

/// floor(j^2/4) l^2 for KT, floor(j^2/2) l^2 for SF.
std::int64_t approx_threshold(int j, int ell, MetricKind kind);

WitnessOutcome kset_witness(const SystemParams& p, Synchrony s, int m, int k);
WitnessOutcome approx_witness(const SystemParams& p, Synchrony s, int m, MetricKind kind,
                              const Rational& eps);
WitnessOutcome block_witness(const SystemParams& p, Synchrony s, const BlockPartition& blocks,
                             MetricKind kind, const Rational& eps);

struct WitnessVerdict {
  bool verified = false;
  std::string reason;
};

/// Recomputes every derived field from the parameters and blocks. Throws
/// IntegrityError on any mismatch; otherwise reports whether the
/// impossibility inequality holds strictly.
WitnessVerdict verify_witness(const WitnessReport& report);

}  // namespace arrovian

#endif  // ARROVIAN_WITNESS_HPP_
