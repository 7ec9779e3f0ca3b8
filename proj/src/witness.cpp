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

#include <algorithm>
#include <numeric>

#include "arrovian/errors.hpp"
#include "arrovian/safety.hpp"

namespace arrovian {

std::string_view to_string(TaskKind kind) {
  return kind == TaskKind::kKSet ? "kset" : "approx";
}

TaskKind parse_task_kind(std::string_view text) {
  if (text == "kset") return TaskKind::kKSet;
  if (text == "approx") return TaskKind::kApprox;
  throw ArgumentError("unknown task '" + std::string(text) + "'");
}

std::int64_t approx_threshold(int j, int ell, MetricKind kind) {
  if (j < 1 || ell < 1) throw ArgumentError("threshold needs j >= 1 and l >= 1");
  const std::int64_t jj = std::int64_t{j} * j;
  const std::int64_t ll = std::int64_t{ell} * ell;
  return (kind == MetricKind::kKendallTau ? jj / 4 : jj / 2) * ll;
}

namespace {

constexpr int kMaxWeakOutputM = 6;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

Domain output_domain(const WitnessReport& r) {
  return r.weak_output ? enumerate_weak(r.m) : enumerate_strict(r.m);
}

std::vector<int> list_order(const WitnessReport& r, int nbar) {
  std::vector<int> order(r.j);
  std::iota(order.begin(), order.end(), 0);
  const int half = r.j / 2;
  if (r.task == TaskKind::kApprox && nbar <= half && half > 0) {
    // Too few slots to reach R'_{half} round-robin; put it second.
    order.erase(order.begin() + half);
    order.insert(order.begin() + 1, half);
  }
  return order;
}

std::optional<Rational> delta_bound(const WitnessReport& r) {
  if (r.j % 2 != 0) return std::nullopt;
  const Rational d2 = r.delta * r.delta;
  if (r.metric == MetricKind::kKendallTau) {
    return d2 / 2 * Rational(std::int64_t{r.m} * (r.m - 1) / 2);
  }
  return d2 * Rational(std::int64_t{r.m} * r.m / 2);
}

// Fills every derived field from the parameters and blocks.
void derive(WitnessReport& r) {
  const SystemParams p(r.n, r.t);
  const int nbar = sync_process_number(p, r.profile_synchrony);
  r.j = r.blocks.block_count();
  r.ell = r.blocks.min_block_size();
  r.delta = Rational(std::int64_t{r.ell} * r.j, r.m);
  r.delta_bound = r.task == TaskKind::kApprox ? delta_bound(r) : std::nullopt;
  const auto order = list_order(r, nbar);
  r.profile = cyclic_profile(r.blocks, nbar, order);
  r.threshold = r.task == TaskKind::kKSet ? std::min(r.m, r.n)
                                          : approx_threshold(r.j, r.ell, r.metric);

  const Domain wo = output_domain(r);
  r.safe_areas.clear();
  for (int i = 0; i < nbar; ++i) r.safe_areas.push_back(safe_area(r.profile, i, r.t, wo));

  r.witness_slots.clear();
  if (r.task == TaskKind::kKSet) {
    std::vector<Preference> seen;
    for (int i = 0; i < nbar; ++i) {
      if (std::find(seen.begin(), seen.end(), r.profile[i]) == seen.end()) {
        seen.push_back(r.profile[i]);
        r.witness_slots.push_back(i);
      }
    }
    r.witness_value = static_cast<std::int64_t>(seen.size());
  } else {
    const auto list = cyclic_preference_list(r.blocks);
    const Preference& first = list[0];
    const Preference& second = list[r.j / 2];
    auto slot_of = [&](const Preference& x) {
      return static_cast<int>(std::find(r.profile.begin(), r.profile.end(), x) -
                              r.profile.begin());
    };
    r.witness_slots = {slot_of(first), slot_of(second)};
    r.witness_value = distance(r.metric, first, second);
  }
}

WitnessVerdict evaluate(const WitnessReport& r) {
  const SystemParams p(r.n, r.t);
  const int nbar = sync_process_number(p, r.profile_synchrony);
  for (int i = 0; i < nbar; ++i) {
    if (r.safe_areas[i] != std::vector<Preference>{r.profile[i]}) {
      return {false, "safe area of slot " + std::to_string(i + 1) + " is not its own input"};
    }
  }
  if (r.j < ceil_div(nbar, r.t)) return {false, "cycle length below ceil(nbar/t)"};
  if (r.task == TaskKind::kKSet) {
    if (r.k >= r.threshold) return {false, "k is not below min(m, n)"};
    if (r.witness_value <= r.k) return {false, "pinned outputs do not exceed k"};
    return {true, "pinned " + std::to_string(r.witness_value) + " distinct outputs > k"};
  }
  if (!(r.eps < Rational(r.threshold))) return {false, "eps is not below the threshold"};
  if (!(Rational(r.witness_value) > r.eps)) return {false, "pinned distance does not exceed eps"};
  return {true, "pinned distance " + std::to_string(r.witness_value) + " > eps"};
}

Synchrony profile_synchrony_for(const WitnessReport& r) {
  if (r.task == TaskKind::kKSet && r.synchrony == Synchrony::kAsync && r.k >= r.n - r.t) {
    return Synchrony::kSync;
  }
  return r.synchrony;
}

bool weak_output_for(const WitnessReport& r) {
  return r.task == TaskKind::kKSet && r.m <= kMaxWeakOutputM;
}

WitnessReport skeleton(TaskKind task, const SystemParams& p, Synchrony s, int m) {
  WitnessReport r;
  r.task = task;
  r.n = p.n;
  r.t = p.t;
  r.synchrony = s;
  r.m = m;
  return r;
}

std::optional<NotApplicable> slot_preconditions(const WitnessReport& r, int j) {
  const SystemParams p(r.n, r.t);
  const int nbar = sync_process_number(p, r.profile_synchrony);
  const int need = ceil_div(nbar, r.t);
  if (j < need) {
    return NotApplicable{"cycle length " + std::to_string(j) + " < ceil(nbar/t) = " +
                         std::to_string(need)};
  }
  if (nbar <= r.t) {
    return NotApplicable{"synchronous process number " + std::to_string(nbar) +
                         " does not exceed t"};
  }
  return std::nullopt;
}

WitnessOutcome approx_core(const SystemParams& p, Synchrony s, const BlockPartition& blocks,
                           MetricKind kind, const Rational& eps) {
  if (eps < 0) throw ArgumentError("eps must be non-negative");
  WitnessReport r = skeleton(TaskKind::kApprox, p, s, blocks.alternative_count());
  r.metric = kind;
  r.eps = eps;
  r.blocks = blocks;
  r.profile_synchrony = profile_synchrony_for(r);
  r.weak_output = weak_output_for(r);
  if (auto na = slot_preconditions(r, blocks.block_count())) return *na;
  const std::int64_t threshold =
      approx_threshold(blocks.block_count(), blocks.min_block_size(), kind);
  if (!(eps < Rational(threshold))) {
    return NotApplicable{"eps = " + format_rational(eps) + " is not below the threshold " +
                         std::to_string(threshold)};
  }
  if (sync_process_number(p, r.profile_synchrony) < 2) {
    return NotApplicable{"an approximate witness needs at least 2 synchronous processes"};
  }
  derive(r);
  r.verified = evaluate(r).verified;
  return r;
}

}  // namespace

WitnessOutcome kset_witness(const SystemParams& p, Synchrony s, int m, int k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  if (m < 1) throw ArgumentError("m must be at least 1");
  WitnessReport r = skeleton(TaskKind::kKSet, p, s, m);
  r.k = k;
  r.blocks = BlockPartition::singletons(m);
  if (k >= std::min(m, p.n)) {
    return NotApplicable{"k = " + std::to_string(k) + " is not below min(m, n) = " +
                         std::to_string(std::min(m, p.n))};
  }
  r.profile_synchrony = profile_synchrony_for(r);
  r.weak_output = weak_output_for(r);
  if (auto na = slot_preconditions(r, m)) return *na;
  derive(r);
  r.verified = evaluate(r).verified;
  return r;
}

WitnessOutcome approx_witness(const SystemParams& p, Synchrony s, int m, MetricKind kind,
                              const Rational& eps) {
  if (m < 1) throw ArgumentError("m must be at least 1");
  return approx_core(p, s, BlockPartition::singletons(m), kind, eps);
}

WitnessOutcome block_witness(const SystemParams& p, Synchrony s, const BlockPartition& blocks,
                             MetricKind kind, const Rational& eps) {
  return approx_core(p, s, blocks, kind, eps);
}

WitnessVerdict verify_witness(const WitnessReport& report) {
  const SystemParams p(report.n, report.t);
  WitnessReport expected = report;
  if (report.blocks.alternative_count() != report.m) {
    throw IntegrityError("blocks do not partition the m alternatives");
  }
  if (report.task == TaskKind::kKSet && !(report.blocks == BlockPartition::singletons(report.m))) {
    throw IntegrityError("k-set witnesses use singleton blocks");
  }
  expected.profile_synchrony = profile_synchrony_for(report);
  expected.weak_output = weak_output_for(report);
  derive(expected);

  auto check = [](bool same, const char* field) {
    if (!same) throw IntegrityError(std::string("recomputed ") + field + " differs");
  };
  check(expected.profile_synchrony == report.profile_synchrony, "profile synchrony");
  check(expected.weak_output == report.weak_output, "output domain");
  check(expected.j == report.j, "cycle length");
  check(expected.ell == report.ell, "minimum block size");
  check(expected.delta == report.delta, "delta");
  check(expected.delta_bound == report.delta_bound, "delta bound");
  check(expected.profile == report.profile, "profile");
  check(expected.threshold == report.threshold, "threshold");
  check(expected.safe_areas == report.safe_areas, "safe areas");
  check(expected.witness_slots == report.witness_slots, "witness slots");
  check(expected.witness_value == report.witness_value, "witness value");

  if (report.task == TaskKind::kApprox) {
    const auto& a = report.profile.at(report.witness_slots.at(0));
    const auto& b = report.profile.at(report.witness_slots.at(1));
    check(distance(report.metric, a, b) == report.witness_value, "witness distance");
  }
  return evaluate(expected);
}

}  // namespace arrovian
