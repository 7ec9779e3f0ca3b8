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

#include "arrovian/reproduce.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "arrovian/aggregation.hpp"
#include "arrovian/cyclic.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/metrics.hpp"
#include "arrovian/parallel.hpp"
#include "arrovian/safety.hpp"
#include "arrovian/sim.hpp"
#include "arrovian/witness.hpp"

namespace arrovian {

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

constexpr std::array<double, kCriterionCount> kLimits = {5, 30, 60, 60, 120, 10, 300, 120, 60};

constexpr std::array<const char*, kCriterionCount> kNames = {
    "metric diameters",
    "metric axioms",
    "arrow base case",
    "perfect-sync maps",
    "cyclic profiles are safe",
    "threshold formulas",
    "unanimity reduction",
    "impossibility consistency",
    "non-dictatorship probe",
};

// Ordered partitions of 0..m-1 into k blocks, each of size <= max_size,
// with every internal order.
void for_each_block_partition(int m, int k, int max_size,
                              const std::function<void(const BlockPartition&)>& fn) {
  std::vector<int> sizes(k, 1);
  std::function<void(int, int)> compose = [&](int index, int remaining) {
    if (index == k) {
      if (remaining != 0) return;
      std::vector<Alternative> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::vector<Alternative>> blocks;
        int pos = 0;
        for (int size : sizes) {
          blocks.emplace_back(perm.begin() + pos, perm.begin() + pos + size);
          pos += size;
        }
        fn(BlockPartition(m, std::move(blocks)));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int size = 1; size <= std::min(max_size, remaining); ++size) {
      sizes[index] = size;
      compose(index + 1, remaining - size);
    }
  };
  compose(0, m);
}

std::vector<std::set<int>> subsets_up_to(int n, int max_size, int min_size = 0) {
  std::vector<std::set<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < min_size || size > max_size) continue;
    std::set<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Every schedule with at most t crashes, rounds 0..max_round, all
// delivered subsets.
std::vector<CrashSchedule> all_schedules(int n, int t, int max_round) {
  std::vector<CrashSchedule> out;
  std::function<void(int, int, CrashSchedule)> rec = [&](int slot, int budget,
                                                        CrashSchedule current) {
    if (slot == n) {
      out.push_back(std::move(current));
      return;
    }
    rec(slot + 1, budget, current);
    if (budget == 0) return;
    for (int round = 0; round <= max_round; ++round) {
      if (round == 0) {
        CrashSchedule next = current;
        next.add(slot, CrashEvent{0, {}});
        rec(slot + 1, budget - 1, std::move(next));
        continue;
      }
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (mask & (1u << slot)) continue;
        CrashEvent ev{round, {}};
        for (int d = 0; d < n; ++d) {
          if (mask & (1u << d)) ev.delivered_to.insert(d);
        }
        CrashSchedule next = current;
        next.add(slot, std::move(ev));
        rec(slot + 1, budget - 1, std::move(next));
      }
    }
  };
  rec(0, t, CrashSchedule{});
  return out;
}

// Runs fn(index) for index in [0, count) across workers; the first
// non-empty failure message (lowest index) wins.
std::string parallel_find_failure(std::size_t count,
                                  const std::function<std::string(std::size_t)>& fn) {
  std::mutex mu;
  std::size_t best_index = count;
  std::string best;
  parallel_chunks(count, max_workers(), [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) {
      std::string failure = fn(i);
      if (failure.empty()) continue;
      std::lock_guard lock(mu);
      if (i < best_index) {
        best_index = i;
        best = std::move(failure);
      }
      return;
    }
  });
  return best;
}

Outcome criterion_diameters() {
  const std::vector<std::int64_t> want_kt = {1, 3, 6, 10};
  const std::vector<std::int64_t> want_sf = {2, 4, 8, 12};
  std::vector<std::int64_t> kt;
  std::vector<std::int64_t> sf;
  for (int m = 2; m <= 5; ++m) {
    const Domain strict = enumerate_strict(m);
    kt.push_back(diameter(strict, MetricKind::kKendallTau));
    sf.push_back(diameter(strict, MetricKind::kSpearmanFootrule));
  }
  std::ostringstream detail;
  detail << "KT";
  for (auto v : kt) detail << ' ' << v;
  detail << "; SF";
  for (auto v : sf) detail << ' ' << v;
  return {kt == want_kt && sf == want_sf, detail.str()};
}

Outcome criterion_axioms() {
  std::uint64_t triples = 0;
  for (MetricKind kind : {MetricKind::kKendallTau, MetricKind::kSpearmanFootrule}) {
    for (int m = 1; m <= 4; ++m) {
      const Domain strict = enumerate_strict(m);
      for (const auto& x : strict) {
        for (const auto& y : strict) {
          const auto dxy = distance(kind, x, y);
          if (dxy != distance(kind, y, x)) {
            return {false, "asymmetric " + format_pref(x) + " " + format_pref(y)};
          }
          if ((dxy == 0) != (x == y) || dxy < 0) {
            return {false, "indiscernibles fail " + format_pref(x) + " " + format_pref(y)};
          }
          for (const auto& z : strict) {
            ++triples;
            if (distance(kind, x, z) > dxy + distance(kind, y, z)) {
              return {false, "triangle fails " + format_pref(x) + " " + format_pref(y) + " " +
                                 format_pref(z)};
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(triples) + " triples over KT and SF, m <= 4"};
}

Outcome criterion_arrow() {
  const ArrowEnumeration e = enumerate_arrow_maps(2, 3);
  bool dictators_check = e.maps.size() == 2;
  for (std::size_t i = 0; i < e.maps.size(); ++i) {
    dictators_check = dictators_check && is_k_dictatorship(e.maps[i], 1) &&
                      !e.decisive_sets[i].empty() && e.decisive_sets[i].front().size() == 1;
  }
  std::ostringstream detail;
  detail << "candidates=" << e.candidates << " weak-order=" << e.weak_order_valid
         << " valid=" << e.valid << " dictatorial=" << e.dictatorial;
  return {e.candidates == 531441 && e.valid == 2 && e.dictatorial == 2 && dictators_check,
          detail.str()};
}

Outcome criterion_perfect_sync() {
  const PerfectSyncReport r = verify_perfect_sync_props();
  std::ostringstream detail;
  detail << "maps=" << r.maps.size() << " consensus=" << r.consensus.size()
         << " kt-agreeing=" << r.kt_agreeing.size() << " sf-agreeing=" << r.sf_agreeing.size();
  return {r.passed && r.maps.size() == 4, detail.str()};
}

Outcome criterion_cyclic_safe() {
  std::uint64_t profiles = 0;
  for (int m = 1; m <= 4; ++m) {
    const Domain strict = enumerate_strict(m);
    for (int t = 1; t <= 2; ++t) {
      for (int nbar = t + 1; nbar <= 5; ++nbar) {
        for (int k = (nbar + t - 1) / t; k <= m; ++k) {
          std::string failure;
          for_each_block_partition(m, k, 2, [&](const BlockPartition& bp) {
            if (!failure.empty()) return;
            const Profile profile = cyclic_profile(bp, nbar);
            ++profiles;
            for (int i = 0; i < nbar; ++i) {
              if (safe_area(profile, i, t, strict) != std::vector<Preference>{profile[i]}) {
                failure = "m=" + std::to_string(m) + " nbar=" + std::to_string(nbar) +
                          " t=" + std::to_string(t) + " blocks " + format_blocks(bp) +
                          " slot " + std::to_string(i + 1);
                return;
              }
            }
          });
          if (!failure.empty()) return {false, failure};
        }
      }
    }
  }
  return {profiles > 0, std::to_string(profiles) + " cyclic profiles checked"};
}

Outcome criterion_thresholds() {
  for (int m = 1; m <= 8; ++m) {
    if (approx_threshold(m, 1, MetricKind::kKendallTau) != m * m / 4 ||
        approx_threshold(m, 1, MetricKind::kSpearmanFootrule) != m * m / 2) {
      return {false, "full-domain threshold mismatch at m=" + std::to_string(m)};
    }
  }
  std::uint64_t lists = 0;
  for (int j = 1; j <= 6; ++j) {
    for (int ell = 1; ell <= 3; ++ell) {
      if (approx_threshold(j, ell, MetricKind::kKendallTau) != (j * j / 4) * ell * ell ||
          approx_threshold(j, ell, MetricKind::kSpearmanFootrule) != (j * j / 2) * ell * ell) {
        return {false, "block threshold mismatch at j=" + std::to_string(j)};
      }
    }
    // Every block-size vector in {1,2,3}^j.
    std::vector<int> sizes(j, 1);
    while (true) {
      std::vector<std::vector<Alternative>> blocks;
      int next = 0;
      for (int size : sizes) {
        std::vector<Alternative> block(size);
        std::iota(block.begin(), block.end(), next);
        next += size;
        blocks.push_back(std::move(block));
      }
      const BlockPartition bp(next, std::move(blocks));
      const auto list = cyclic_preference_list(bp);
      const int half = j / 2;
      std::int64_t first = 0;
      std::int64_t second = 0;
      for (int b = 0; b < j; ++b) (b < half ? first : second) += sizes[b];
      const auto kt = kendall_tau(list[0], list[half]);
      const auto sf = spearman_footrule(list[0], list[half]);
      ++lists;
      if (kt != first * second || sf != 2 * kt) {
        return {false, "product formula fails for blocks " + format_blocks(bp)};
      }
      const int ell = *std::min_element(sizes.begin(), sizes.end());
      if (kt < approx_threshold(j, ell, MetricKind::kKendallTau) ||
          sf < approx_threshold(j, ell, MetricKind::kSpearmanFootrule)) {
        return {false, "measured distance below threshold for blocks " + format_blocks(bp)};
      }
      int pos = 0;
      while (pos < j && sizes[pos] == 3) sizes[pos++] = 1;
      if (pos == j) break;
      ++sizes[pos];
    }
  }
  return {true, std::to_string(lists) + " cyclic lists measured"};
}

std::string describe(const ExecutionTrace& trace, const TaskVerdict& v) {
  std::string inputs;
  for (const auto& in : trace.inputs) {
    if (!inputs.empty()) inputs += ',';
    inputs += in ? format_pref(*in) : "-";
  }
  return "inputs " + inputs + " schedule '" + format_schedule(trace.schedule) +
         "' slot " + std::to_string(*v.violating_slot + 1);
}

Outcome criterion_unanimity_reduction() {
  std::ostringstream detail;
  {
    const SystemParams p(3, 1);
    const Domain l3 = enumerate_strict(3);
    const FloodDecide flood(l3);
    const AggregationMap f = extract_execution_map(flood, l3, p, Synchrony::kSync);
    if (!check_u_unanimity(f, 3 - 1).holds) return {false, "sync map fails 2-unanimity"};

    const auto schedules = all_schedules(3, 1, 2);
    const std::size_t profiles = profile_space_size(l3, 3);
    const std::string failure =
        parallel_find_failure(profiles * schedules.size(), [&](std::size_t idx) {
          const Profile in = profile_at(l3, 3, idx / schedules.size());
          const auto trace = run_sync(flood, in, schedules[idx % schedules.size()], p);
          const TaskVerdict v = check_unanimity_on_correct(trace);
          return v.unanimity ? std::string() : "sync " + describe(trace, v);
        });
    if (!failure.empty()) return {false, failure};
    detail << "sync: " << schedules.size() << " schedules x " << profiles << " profiles; ";
  }
  {
    const SystemParams p(4, 1);
    const Domain l2 = enumerate_strict(2);
    const FloodDecide flood(l2);
    const AggregationMap f = extract_execution_map(flood, l2, p, Synchrony::kAsync);
    if (!check_u_unanimity(f, 3 - 1).holds) return {false, "async map fails 2-unanimity"};

    std::uint64_t runs = 0;
    auto check = [&](const ExecutionTrace& trace) -> std::string {
      ++runs;
      const TaskVerdict v = check_unanimity_on_correct(trace);
      return v.unanimity ? std::string() : "async " + describe(trace, v);
    };
    for (std::size_t idx = 0; idx < profile_space_size(l2, 3); ++idx) {
      const Profile in = profile_at(l2, 3, idx);
      for (const auto& silent : subsets_up_to(4, 1, 1)) {
        if (auto e = check(run_async_canonical(flood, in, p, silent)); !e.empty()) return {false, e};
      }
    }
    const auto schedules = all_schedules(4, 1, 2);
    for (std::size_t idx = 0; idx < profile_space_size(l2, 4); ++idx) {
      const Profile in = profile_at(l2, 4, idx);
      for (const auto& delayed : subsets_up_to(4, 1, 1)) {
        for (const auto& faulty : subsets_up_to(4, 1)) {
          if (auto e = check(run_async_delayed(flood, in, p, delayed, faulty)); !e.empty()) {
            return {false, e};
          }
        }
      }
      for (const auto& sched : schedules) {
        if (auto e = check(run_async_with_crashes(flood, in, sched, p)); !e.empty()) {
          return {false, e};
        }
      }
    }
    detail << "async: " << runs << " executions";
  }
  return {true, detail.str()};
}

// Runs FloodDecide on the witness profile in the execution the report
// describes; returns a failure message or empty.
std::string confirm_with_simulator(const WitnessReport& r) {
  const SystemParams p(r.n, r.t);
  const FloodDecide flood(r.weak_output ? enumerate_weak(r.m) : enumerate_strict(r.m));
  ExecutionTrace trace;
  if (r.synchrony == Synchrony::kSync) {
    trace = run_sync(flood, r.profile, {}, p);
  } else if (r.profile_synchrony == Synchrony::kAsync) {
    trace = run_async_canonical(flood, r.profile, p);
  } else {
    trace = run_async_with_crashes(flood, r.profile, {}, p);
  }
  for (int slot : r.witness_slots) {
    if (trace.decisions.at(slot) != r.profile[slot]) {
      return "slot " + std::to_string(slot + 1) + " did not decide its own input";
    }
  }
  const Task task = r.task == TaskKind::kKSet ? Task{KSetTask{r.k}} : Task{ApproxTask{r.eps, r.metric}};
  const TaskVerdict v = check_task(trace, task);
  if (!v.unanimity) return "unanimity violated";
  if (v.agreement) return "agreement held";
  return {};
}

Outcome criterion_impossibility() {
  std::vector<WitnessReport> reports;
  auto keep = [&](const WitnessOutcome& o) {
    if (const auto* r = std::get_if<WitnessReport>(&o); r && r->verified) reports.push_back(*r);
  };
  for (int n = 2; n <= 5; ++n) {
    for (int t = 1; t < n; ++t) {
      const SystemParams p(n, t);
      for (Synchrony s : {Synchrony::kSync, Synchrony::kAsync}) {
        for (int m = 1; m <= 4; ++m) {
          for (int k = 1; k <= m; ++k) keep(kset_witness(p, s, m, k));
          for (MetricKind kind : {MetricKind::kKendallTau, MetricKind::kSpearmanFootrule}) {
            for (int j = 2; j <= m; ++j) {
              for_each_block_partition(m, j, m, [&](const BlockPartition& bp) {
                const auto bound = approx_threshold(j, bp.min_block_size(), kind);
                for (std::int64_t twice = 0; twice < 2 * bound; ++twice) {
                  keep(block_witness(p, s, bp, kind, Rational(twice, 2)));
                }
              });
            }
          }
        }
      }
    }
  }
  const std::string failure = parallel_find_failure(reports.size(), [&](std::size_t i) {
    const WitnessReport& r = reports[i];
    const std::string e = confirm_with_simulator(r);
    if (e.empty()) return e;
    return std::string(to_string(r.task)) + " n=" + std::to_string(r.n) + " t=" +
           std::to_string(r.t) + " " + std::string(to_string(r.synchrony)) + " blocks " +
           format_blocks(r.blocks) + ": " + e;
  });
  if (!failure.empty()) return {false, failure};
  return {!reports.empty(), std::to_string(reports.size()) + " verified witnesses confirmed"};
}

Outcome criterion_probe() {
  const Domain l3 = enumerate_strict(3);
  const FloodDecide flood(l3);
  const NaiveLeader leader(l3);
  std::uint64_t probes = 0;
  std::uint64_t leader_failures = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int t = 1; t <= std::min(2, n - 1); ++t) {
      const SystemParams p(n, t);
      for (const auto& coalition : subsets_up_to(n, t, 1)) {
        for (const auto& r : l3) {
          for (const auto& r2 : l3) {
            if (r == r2) continue;
            ++probes;
            const ProbeVerdict v = indistinguishability_probe(flood, r, r2, coalition, p);
            if (!v.passed) {
              return {false, "flood probe fails n=" + std::to_string(n) + " R=" + format_pref(r) +
                                 " R'=" + format_pref(r2)};
            }
            if (coalition.count(0)) {
              const ProbeVerdict lv = indistinguishability_probe(leader, r, r2, coalition, p);
              if (lv.passed || lv.unanimity_forced || !lv.violating_pair || !lv.violating_slot) {
                return {false, "naive leader not caught n=" + std::to_string(n)};
              }
              ++leader_failures;
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(probes) + " flood probes passed; " +
                    std::to_string(leader_failures) + " naive-leader violations found"};
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw ArgumentError("no criterion " + std::to_string(id));
  static const std::array<std::function<Outcome()>, kCriterionCount> kRunners = {
      criterion_diameters,     criterion_axioms,     criterion_arrow,
      criterion_perfect_sync,  criterion_cyclic_safe, criterion_thresholds,
      criterion_unanimity_reduction, criterion_impossibility, criterion_probe,
  };
  CriterionResult result;
  result.id = id;
  result.name = kNames[id - 1];
  result.limit_seconds = kLimits[id - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = kRunners[id - 1]();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.detail = outcome.detail;
  result.passed = outcome.ok && result.seconds < result.limit_seconds;
  return result;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) results.push_back(run_criterion(id));
  return results;
}

}  // namespace arrovian
