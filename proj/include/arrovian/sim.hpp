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

#ifndef ARROVIAN_SIM_HPP_
#define ARROVIAN_SIM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arrovian/aggregation.hpp"
#include "arrovian/cyclic.hpp"
#include "arrovian/metrics.hpp"
#include "arrovian/prefs.hpp"
#include "arrovian/rational.hpp"

namespace arrovian {

/// Slot -> input, as far as a process knows.
using KnownInputs = std::map<int, Preference>;

struct Message {
  KnownInputs known;

  friend bool operator==(const Message&, const Message&) = default;
};

/// Destination slot -> message.
using Outbox = std::map<int, Message>;

struct ProcessContext {
  int slot = 0;
  int n = 0;
  int t = 0;
  Synchrony synchrony = Synchrony::kSync;
};

struct ProcessState {
  ProcessContext ctx;
  Preference input;
  KnownInputs view;
};

struct StepOutcome {
  ProcessState state;
  Outbox outbox;
  std::optional<Preference> decision;
};

/// Deterministic full-information round protocol.
class Protocol {
 public:
  virtual ~Protocol() = default;

  virtual std::string name() const = 0;
  virtual const Domain& output_domain() const = 0;
  /// Last round by which every live process must have decided.
  virtual int round_bound(const ProcessContext& ctx) const;
  /// Initial state and the round-1 outbox.
  virtual StepOutcome initialize(const ProcessContext& ctx, const Preference& input) const = 0;
  /// Consumes the messages of `round`; returns the next outbox or a decision.
  virtual StepOutcome step(const ProcessState& state, int round,
                           const std::map<int, Message>& received) const = 0;
};

/// Floods every known input; decides the least member of the safe area of
/// its view. Sync: t + 1 rounds. Async: one exchange.
class FloodDecide final : public Protocol {
 public:
  explicit FloodDecide(Domain output) : output_(std::move(output)) {}

  std::string name() const override { return "flood"; }
  const Domain& output_domain() const override { return output_; }
  StepOutcome initialize(const ProcessContext& ctx, const Preference& input) const override;
  StepOutcome step(const ProcessState& state, int round,
                   const std::map<int, Message>& received) const override;

  /// The decision rule applied to a view.
  Preference decide(const KnownInputs& view, int self, int t) const;

 private:
  Domain output_;
};

/// Decides slot 0's input after one round, or its own input if slot 0 was
/// not heard from.
class NaiveLeader final : public Protocol {
 public:
  explicit NaiveLeader(Domain output) : output_(std::move(output)) {}

  std::string name() const override { return "naive-leader"; }
  const Domain& output_domain() const override { return output_; }
  int round_bound(const ProcessContext& ctx) const override;
  StepOutcome initialize(const ProcessContext& ctx, const Preference& input) const override;
  StepOutcome step(const ProcessState& state, int round,
                   const std::map<int, Message>& received) const override;

 private:
  Domain output_;
};

/// "flood" or "naive-leader".
std::unique_ptr<Protocol> make_protocol(std::string_view name, Domain output);

struct CrashEvent {
  /// 0 means silent: the slot never sends.
  int round = 0;
  /// Destinations reached by the round-`round` outbox.
  std::set<int> delivered_to;

  friend bool operator==(const CrashEvent&, const CrashEvent&) = default;
};

class CrashSchedule {
 public:
  CrashSchedule() = default;

  void add(int slot, CrashEvent event);
  const std::map<int, CrashEvent>& events() const { return events_; }
  bool crashes(int slot) const { return events_.count(slot) != 0; }
  const CrashEvent* find(int slot) const;
  std::set<int> faulty() const;
  /// At most t faulty slots, all in range, deliveries to other slots only.
  void validate(int n, int t) const;

  friend bool operator==(const CrashSchedule&, const CrashSchedule&) = default;

 private:
  std::map<int, CrashEvent> events_;
};

/// Comma-separated `slot@round:d1|d2|...`, slots 1-based; `slot@0:` is silent.
CrashSchedule parse_schedule(std::string_view text);
std::string format_schedule(const CrashSchedule& schedule);

struct Delivery {
  int from = 0;
  int to = 0;
  std::vector<int> known_slots;

  friend bool operator==(const Delivery&, const Delivery&) = default;
};

struct RoundLog {
  int round = 0;
  /// 1 for ordinary rounds; 2 for the catch-up phase of delayed runs.
  int phase = 1;
  std::vector<Delivery> deliveries;

  friend bool operator==(const RoundLog&, const RoundLog&) = default;
};

struct ExecutionTrace {
  int n = 0;
  int t = 0;
  Synchrony synchrony = Synchrony::kSync;
  /// Empty for slots that never take part.
  std::vector<std::optional<Preference>> inputs;
  CrashSchedule schedule;
  std::set<int> delayed;
  std::vector<RoundLog> rounds;
  /// Correct slots only.
  std::map<int, Preference> decisions;
  std::set<int> correct_set;

  friend bool operator==(const ExecutionTrace&, const ExecutionTrace&) = default;
};

ExecutionTrace run_sync(const Protocol& proto, const Profile& profile,
                        const CrashSchedule& schedule, const SystemParams& p);

/// `profile` holds the inputs of the n - t participants in slot order; the
/// slots in `silent` (last t by default) crash before sending anything.
ExecutionTrace run_async_canonical(const Protocol& proto, const Profile& profile,
                                   const SystemParams& p,
                                   std::optional<std::set<int>> silent = std::nullopt);

/// Messages from `delayed` reach nobody until every other process has
/// decided; then the delayed processes receive everything queued for them.
/// Slots in `faulty` count as crashed after the run.
ExecutionTrace run_async_delayed(const Protocol& proto, const Profile& profile,
                                 const SystemParams& p, const std::set<int>& delayed,
                                 const std::set<int>& faulty = {});

/// Asynchronous-mode protocol under a crash schedule with all n slots.
ExecutionTrace run_async_with_crashes(const Protocol& proto, const Profile& profile,
                                      const CrashSchedule& schedule, const SystemParams& p);

struct KSetTask {
  int k = 1;
};

struct ApproxTask {
  Rational eps;
  MetricKind metric = MetricKind::kKendallTau;
};

using Task = std::variant<KSetTask, ApproxTask>;

/// Parses "kset:K" or "approx:EPS:kt|sf".
Task parse_task(std::string_view text);

struct TaskVerdict {
  bool unanimity = true;
  std::optional<std::pair<Alternative, Alternative>> violating_pair;
  std::optional<int> violating_slot;
  bool agreement = true;
  /// k-set: one slot per distinct decision. approx: the farthest pair.
  std::vector<int> witness_slots;
  /// Distinct decision count or maximal pairwise distance.
  std::int64_t value = 0;

  bool passed() const { return unanimity && agreement; }
};

/// Unanimity on correct slots only.
TaskVerdict check_unanimity_on_correct(const ExecutionTrace& trace);
TaskVerdict check_task(const ExecutionTrace& trace, const Task& task);

struct ProbeVerdict {
  bool passed = false;
  /// Decisions outside T coincide in both executions.
  bool indistinguishable = false;
  /// In the T-faulty execution every decision outside T reverses the pairs.
  bool unanimity_forced = false;
  std::vector<std::pair<Alternative, Alternative>> reversed_pairs;
  std::map<int, Preference> decisions;
  std::map<int, Preference> decisions_faulty;
  std::optional<int> violating_slot;
  std::optional<std::pair<Alternative, Alternative>> violating_pair;
};

/// Runs the failure-free execution with T holding `r` and the others `r2`,
/// then the execution where T crashes in the last round after a full send.
ProbeVerdict indistinguishability_probe(const Protocol& proto, const Preference& r,
                                        const Preference& r2, const std::set<int>& coalition,
                                        const SystemParams& p);

/// Upper bound on nbar * |W_I|^nbar for extract_execution_map.
inline constexpr std::uint64_t kMaxExtractionWork = 1'000'000;

/// Execution map of the canonical executions over nbar(s) slots.
AggregationMap extract_execution_map(const Protocol& proto, const Domain& input,
                                     const SystemParams& p, Synchrony s);

}  // namespace arrovian

#endif  // ARROVIAN_SIM_HPP_
