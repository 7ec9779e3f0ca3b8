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

#include "arrovian/sim.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "arrovian/errors.hpp"
#include "arrovian/safety.hpp"

namespace arrovian {

namespace {

Outbox broadcast(const ProcessContext& ctx, const KnownInputs& view) {
  Outbox out;
  for (int dest = 0; dest < ctx.n; ++dest) {
    if (dest != ctx.slot) out.emplace(dest, Message{view});
  }
  return out;
}

void absorb(KnownInputs& view, const std::map<int, Message>& received) {
  for (const auto& [from, msg] : received) {
    for (const auto& [slot, pref] : msg.known) view.emplace(slot, pref);
  }
}

}  // namespace

int Protocol::round_bound(const ProcessContext& ctx) const {
  return ctx.synchrony == Synchrony::kSync ? ctx.t + 1 : 1;
}

StepOutcome FloodDecide::initialize(const ProcessContext& ctx, const Preference& input) const {
  ProcessState state{ctx, input, {{ctx.slot, input}}};
  Outbox out = broadcast(ctx, state.view);
  return {std::move(state), std::move(out), std::nullopt};
}

StepOutcome FloodDecide::step(const ProcessState& state, int round,
                              const std::map<int, Message>& received) const {
  ProcessState next = state;
  absorb(next.view, received);
  if (round >= round_bound(state.ctx)) {
    Preference d = decide(next.view, state.ctx.slot, state.ctx.t);
    return {std::move(next), {}, std::move(d)};
  }
  Outbox out = broadcast(next.ctx, next.view);
  return {std::move(next), std::move(out), std::nullopt};
}

Preference FloodDecide::decide(const KnownInputs& view, int self, int t) const {
  std::vector<Preference> members;
  int self_index = -1;
  for (const auto& [slot, pref] : view) {
    if (slot == self) self_index = static_cast<int>(members.size());
    members.push_back(pref);
  }
  if (self_index < 0) throw ArgumentError("view lacks the deciding slot");
  const int effective_t = std::min(t, static_cast<int>(members.size()) - 1);
  const auto area = safe_area(members, self_index, effective_t, output_);
  if (area.empty()) throw VerificationError("empty safe area; own input outside W_O");
  return *std::min_element(area.begin(), area.end());
}

int NaiveLeader::round_bound(const ProcessContext&) const { return 1; }

StepOutcome NaiveLeader::initialize(const ProcessContext& ctx, const Preference& input) const {
  ProcessState state{ctx, input, {{ctx.slot, input}}};
  Outbox out = broadcast(ctx, state.view);
  return {std::move(state), std::move(out), std::nullopt};
}

StepOutcome NaiveLeader::step(const ProcessState& state, int,
                              const std::map<int, Message>& received) const {
  ProcessState next = state;
  absorb(next.view, received);
  auto leader = next.view.find(0);
  Preference d = leader != next.view.end() ? leader->second : next.input;
  if (!output_.contains(d)) throw VerificationError("leader input outside W_O");
  return {std::move(next), {}, std::move(d)};
}

std::unique_ptr<Protocol> make_protocol(std::string_view name, Domain output) {
  if (name == "flood") return std::make_unique<FloodDecide>(std::move(output));
  if (name == "naive-leader") return std::make_unique<NaiveLeader>(std::move(output));
  throw ArgumentError("unknown protocol '" + std::string(name) + "'");
}

void CrashSchedule::add(int slot, CrashEvent event) {
  if (!events_.emplace(slot, std::move(event)).second) {
    throw ArgumentError("slot " + std::to_string(slot + 1) + " crashes twice");
  }
}

const CrashEvent* CrashSchedule::find(int slot) const {
  auto it = events_.find(slot);
  return it == events_.end() ? nullptr : &it->second;
}

std::set<int> CrashSchedule::faulty() const {
  std::set<int> out;
  for (const auto& [slot, ev] : events_) out.insert(slot);
  return out;
}

void CrashSchedule::validate(int n, int t) const {
  if (static_cast<int>(events_.size()) > t) {
    throw ArgumentError("schedule has " + std::to_string(events_.size()) +
                        " faulty slots but t=" + std::to_string(t));
  }
  for (const auto& [slot, ev] : events_) {
    if (slot < 0 || slot >= n) throw ArgumentError("faulty slot out of range");
    if (ev.round < 0) throw ArgumentError("negative crash round");
    if (ev.round == 0 && !ev.delivered_to.empty()) {
      throw ArgumentError("a silent slot delivers nothing");
    }
    for (int d : ev.delivered_to) {
      if (d < 0 || d >= n || d == slot) throw ArgumentError("invalid delivery destination");
    }
  }
}

namespace {

int parse_int(std::string_view text, std::size_t offset) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError("expected integer, got '" + std::string(text) + "'", offset);
  }
  return value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && s.front() == ' ') {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

CrashSchedule parse_schedule(std::string_view text) {
  CrashSchedule schedule;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::size_t offset = pos;
    std::string_view item = trim(text.substr(pos, comma - pos), offset);
    if (item.empty()) {
      if (text.find_first_not_of(' ') == std::string_view::npos) break;
      throw ParseError("empty schedule entry", offset);
    }
    const std::size_t at = item.find('@');
    const std::size_t colon = item.find(':');
    if (at == std::string_view::npos || colon == std::string_view::npos || colon < at) {
      throw ParseError("expected slot@round:destinations", offset);
    }
    const int slot = parse_int(item.substr(0, at), offset);
    const int round = parse_int(item.substr(at + 1, colon - at - 1), offset + at + 1);
    if (slot < 1) throw ParseError("slots are 1-based", offset);
    CrashEvent ev{round, {}};
    std::string_view rest = item.substr(colon + 1);
    std::size_t rest_offset = offset + colon + 1;
    while (!rest.empty()) {
      std::size_t bar = rest.find('|');
      if (bar == std::string_view::npos) bar = rest.size();
      const int dest = parse_int(rest.substr(0, bar), rest_offset);
      if (dest < 1) throw ParseError("slots are 1-based", rest_offset);
      ev.delivered_to.insert(dest - 1);
      if (bar == rest.size()) break;
      rest.remove_prefix(bar + 1);
      rest_offset += bar + 1;
      if (rest.empty()) throw ParseError("dangling '|'", rest_offset);
    }
    schedule.add(slot - 1, std::move(ev));
    pos = comma + 1;
  }
  return schedule;
}

std::string format_schedule(const CrashSchedule& schedule) {
  std::string out;
  for (const auto& [slot, ev] : schedule.events()) {
    if (!out.empty()) out += ',';
    out += std::to_string(slot + 1) + '@' + std::to_string(ev.round) + ':';
    bool first = true;
    for (int d : ev.delivered_to) {
      if (!first) out += '|';
      out += std::to_string(d + 1);
      first = false;
    }
  }
  return out;
}

namespace {

struct EngineSetup {
  SystemParams params;
  Synchrony mode;
  std::vector<std::optional<Preference>> inputs;
  CrashSchedule schedule;
  std::set<int> delayed;
  std::set<int> extra_faulty;
};

struct Pending {
  int from;
  Message msg;
};

std::vector<int> slots_of(const KnownInputs& known) {
  std::vector<int> out;
  for (const auto& [slot, pref] : known) out.push_back(slot);
  return out;
}

ExecutionTrace run_engine(const Protocol& proto, EngineSetup setup) {
  const int n = setup.params.n;
  setup.schedule.validate(n, setup.params.t);
  for (int slot = 0; slot < n; ++slot) {
    if (!setup.inputs[slot] && !(setup.schedule.find(slot) &&
                                 setup.schedule.find(slot)->round == 0)) {
      throw ArgumentError("slot " + std::to_string(slot + 1) + " has no input");
    }
  }

  ExecutionTrace trace;
  trace.n = n;
  trace.t = setup.params.t;
  trace.synchrony = setup.mode;
  trace.inputs = setup.inputs;
  trace.schedule = setup.schedule;
  trace.delayed = setup.delayed;

  auto crash_round = [&](int slot) {
    const CrashEvent* ev = setup.schedule.find(slot);
    return ev ? ev->round : -1;
  };
  // Alive in round r: never silent and not crashed in an earlier round.
  auto alive_in = [&](int slot, int r) {
    const int cr = crash_round(slot);
    return cr < 0 || cr >= r;
  };

  std::vector<std::optional<ProcessState>> states(n);
  std::vector<Outbox> outbox(n);
  std::vector<std::optional<Preference>> decided(n);
  int bound = 0;
  for (int slot = 0; slot < n; ++slot) {
    const ProcessContext ctx{slot, n, setup.params.t, setup.mode};
    bound = std::max(bound, proto.round_bound(ctx));
    if (crash_round(slot) == 0) continue;
    StepOutcome init = proto.initialize(ctx, *setup.inputs[slot]);
    states[slot] = std::move(init.state);
    outbox[slot] = std::move(init.outbox);
    decided[slot] = std::move(init.decision);
  }

  auto sends = [&](int from, int r) {
    return states[from] && alive_in(from, r) && !decided[from];
  };
  auto reaches = [&](int from, int to, int r) {
    const CrashEvent* ev = setup.schedule.find(from);
    if (ev && ev->round == r) return ev->delivered_to.count(to) != 0;
    return true;
  };
  auto steps = [&](int slot, int r) {
    return states[slot] && crash_round(slot) != r && alive_in(slot, r) && !decided[slot];
  };

  // queued[r][to] holds messages withheld from phase 1 for delayed receivers.
  std::vector<std::map<int, std::vector<Pending>>> queued(bound + 1);
  auto commit = [&](int slot, StepOutcome outcome) {
    states[slot] = std::move(outcome.state);
    outbox[slot] = std::move(outcome.outbox);
    if (outcome.decision) {
      if (!proto.output_domain().contains(*outcome.decision)) {
        throw VerificationError("decision outside W_O");
      }
      decided[slot] = std::move(outcome.decision);
    }
  };

  for (int r = 1; r <= bound; ++r) {
    RoundLog log{r, 1, {}};
    std::vector<std::map<int, Message>> inbox(n);
    for (int from = 0; from < n; ++from) {
      if (!sends(from, r)) continue;
      for (const auto& [to, msg] : outbox[from]) {
        if (!reaches(from, to, r)) continue;
        if (setup.delayed.count(from) || setup.delayed.count(to)) {
          queued[r][to].push_back({from, msg});
        } else {
          log.deliveries.push_back({from, to, slots_of(msg.known)});
          inbox[to].emplace(from, msg);
        }
      }
    }
    for (int slot = 0; slot < n; ++slot) {
      if (setup.delayed.count(slot) || !steps(slot, r)) continue;
      commit(slot, proto.step(*states[slot], r, inbox[slot]));
    }
    trace.rounds.push_back(std::move(log));
  }

  if (!setup.delayed.empty()) {
    for (int r = 1; r <= bound; ++r) {
      RoundLog log{r, 2, {}};
      std::vector<std::map<int, Message>> inbox(n);
      for (int to : setup.delayed) {
        for (const auto& pending : queued[r][to]) {
          if (setup.delayed.count(pending.from)) continue;
          log.deliveries.push_back({pending.from, to, slots_of(pending.msg.known)});
          inbox[to].emplace(pending.from, pending.msg);
        }
      }
      for (int from : setup.delayed) {
        if (!sends(from, r)) continue;
        for (const auto& [to, msg] : outbox[from]) {
          if (!setup.delayed.count(to) || !reaches(from, to, r)) continue;
          log.deliveries.push_back({from, to, slots_of(msg.known)});
          inbox[to].emplace(from, msg);
        }
      }
      for (int slot : setup.delayed) {
        if (steps(slot, r)) commit(slot, proto.step(*states[slot], r, inbox[slot]));
      }
      trace.rounds.push_back(std::move(log));
    }
  }

  for (int slot = 0; slot < n; ++slot) {
    if (setup.schedule.crashes(slot) || setup.extra_faulty.count(slot)) continue;
    trace.correct_set.insert(slot);
    if (!decided[slot]) {
      throw LivenessError("slot " + std::to_string(slot + 1) + " undecided after round " +
                          std::to_string(bound));
    }
    trace.decisions.emplace(slot, *decided[slot]);
  }
  return trace;
}

std::vector<std::optional<Preference>> as_inputs(const Profile& profile) {
  return {profile.begin(), profile.end()};
}

void require_length(const Profile& profile, int expected) {
  if (static_cast<int>(profile.size()) != expected) {
    throw ArgumentError("profile has " + std::to_string(profile.size()) +
                        " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

ExecutionTrace run_sync(const Protocol& proto, const Profile& profile,
                        const CrashSchedule& schedule, const SystemParams& p) {
  require_length(profile, p.n);
  return run_engine(proto, {p, Synchrony::kSync, as_inputs(profile), schedule, {}, {}});
}

ExecutionTrace run_async_canonical(const Protocol& proto, const Profile& profile,
                                   const SystemParams& p, std::optional<std::set<int>> silent) {
  require_length(profile, p.n - p.t);
  std::set<int> quiet;
  if (silent) {
    quiet = *silent;
  } else {
    for (int slot = p.n - p.t; slot < p.n; ++slot) quiet.insert(slot);
  }
  if (static_cast<int>(quiet.size()) != p.t ||
      std::any_of(quiet.begin(), quiet.end(), [&](int s) { return s < 0 || s >= p.n; })) {
    throw ArgumentError("canonical executions silence exactly t valid slots");
  }
  CrashSchedule schedule;
  std::vector<std::optional<Preference>> inputs(p.n);
  std::size_t next = 0;
  for (int slot = 0; slot < p.n; ++slot) {
    if (quiet.count(slot)) {
      schedule.add(slot, CrashEvent{0, {}});
    } else {
      inputs[slot] = profile[next++];
    }
  }
  return run_engine(proto, {p, Synchrony::kAsync, std::move(inputs), std::move(schedule), {}, {}});
}

ExecutionTrace run_async_delayed(const Protocol& proto, const Profile& profile,
                                 const SystemParams& p, const std::set<int>& delayed,
                                 const std::set<int>& faulty) {
  require_length(profile, p.n);
  if (static_cast<int>(delayed.size()) > p.t || static_cast<int>(faulty.size()) > p.t) {
    throw ArgumentError("at most t slots may be delayed or faulty");
  }
  for (int s : delayed) {
    if (s < 0 || s >= p.n) throw ArgumentError("delayed slot out of range");
  }
  for (int s : faulty) {
    if (s < 0 || s >= p.n) throw ArgumentError("faulty slot out of range");
  }
  return run_engine(proto, {p, Synchrony::kAsync, as_inputs(profile), {}, delayed, faulty});
}

ExecutionTrace run_async_with_crashes(const Protocol& proto, const Profile& profile,
                                      const CrashSchedule& schedule, const SystemParams& p) {
  require_length(profile, p.n);
  return run_engine(proto, {p, Synchrony::kAsync, as_inputs(profile), schedule, {}, {}});
}

Task parse_task(std::string_view text) {
  if (text.rfind("kset:", 0) == 0) {
    const int k = parse_int(text.substr(5), 5);
    if (k < 1) throw ArgumentError("k must be at least 1");
    return KSetTask{k};
  }
  if (text.rfind("approx:", 0) == 0) {
    const std::string_view rest = text.substr(7);
    const std::size_t colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw ParseError("expected approx:EPS:kt|sf", 7);
    ApproxTask task{parse_rational(rest.substr(0, colon)),
                    parse_metric_kind(rest.substr(colon + 1))};
    if (task.eps < 0) throw ArgumentError("eps must be non-negative");
    return task;
  }
  throw ParseError("expected kset:K or approx:EPS:kt|sf", 0);
}

TaskVerdict check_unanimity_on_correct(const ExecutionTrace& trace) {
  TaskVerdict verdict;
  if (trace.correct_set.empty()) return verdict;
  std::vector<Preference> correct_inputs;
  for (int slot : trace.correct_set) correct_inputs.push_back(*trace.inputs.at(slot));
  const ConstraintSet required = unanimous_pairs(correct_inputs);
  for (const auto& [a, b] : required.pairs()) {
    for (const auto& [slot, d] : trace.decisions) {
      if (!strictly_prefers(d, a, b)) {
        verdict.unanimity = false;
        verdict.violating_pair = std::pair{a, b};
        verdict.violating_slot = slot;
        return verdict;
      }
    }
  }
  return verdict;
}

TaskVerdict check_task(const ExecutionTrace& trace, const Task& task) {
  TaskVerdict verdict = check_unanimity_on_correct(trace);
  if (const auto* kset = std::get_if<KSetTask>(&task)) {
    if (kset->k < 1) throw ArgumentError("k must be at least 1");
    std::vector<Preference> seen;
    for (const auto& [slot, d] : trace.decisions) {
      if (std::find(seen.begin(), seen.end(), d) == seen.end()) {
        seen.push_back(d);
        verdict.witness_slots.push_back(slot);
      }
    }
    verdict.value = static_cast<std::int64_t>(seen.size());
    verdict.agreement = verdict.value <= kset->k;
  } else {
    const auto& approx = std::get<ApproxTask>(task);
    if (approx.eps < 0) throw ArgumentError("eps must be non-negative");
    for (auto i = trace.decisions.begin(); i != trace.decisions.end(); ++i) {
      for (auto j = std::next(i); j != trace.decisions.end(); ++j) {
        const std::int64_t d = distance(approx.metric, i->second, j->second);
        if (d > verdict.value || verdict.witness_slots.empty()) {
          verdict.value = d;
          verdict.witness_slots = {i->first, j->first};
        }
      }
    }
    verdict.agreement = Rational(verdict.value) <= approx.eps;
  }
  return verdict;
}

ProbeVerdict indistinguishability_probe(const Protocol& proto, const Preference& r,
                                        const Preference& r2, const std::set<int>& coalition,
                                        const SystemParams& p) {
  if (coalition.empty() || static_cast<int>(coalition.size()) > p.t) {
    throw ArgumentError("the coalition needs 1 <= |T| <= t");
  }
  for (int s : coalition) {
    if (s < 0 || s >= p.n) throw ArgumentError("coalition slot out of range");
  }
  if (r.size() != r2.size()) throw ArgumentError("preferences over different alternative sets");

  ProbeVerdict verdict;
  for (Alternative a = 0; a < r.size(); ++a) {
    for (Alternative b = 0; b < r.size(); ++b) {
      if (a != b && strictly_prefers(r, a, b) && strictly_prefers(r2, b, a)) {
        verdict.reversed_pairs.emplace_back(a, b);
      }
    }
  }
  if (verdict.reversed_pairs.empty()) {
    throw ArgumentError("no pair is reversed between the two preferences");
  }

  Profile profile(p.n, r2);
  for (int s : coalition) profile[s] = r;

  const ExecutionTrace xi = run_sync(proto, profile, {}, p);
  if (!(run_sync(proto, profile, {}, p) == xi)) {
    throw DeterminismError("protocol '" + proto.name() + "' produced differing traces");
  }
  CrashSchedule schedule;
  const int bound = proto.round_bound({0, p.n, p.t, Synchrony::kSync});
  for (int s : coalition) {
    CrashEvent ev{bound, {}};
    for (int d = 0; d < p.n; ++d) {
      if (d != s) ev.delivered_to.insert(d);
    }
    schedule.add(s, std::move(ev));
  }
  const ExecutionTrace xi_faulty = run_sync(proto, profile, schedule, p);

  verdict.decisions = xi.decisions;
  verdict.decisions_faulty = xi_faulty.decisions;
  verdict.indistinguishable = true;
  verdict.unanimity_forced = true;
  for (const auto& [slot, d] : xi_faulty.decisions) {
    if (xi.decisions.at(slot) != d) verdict.indistinguishable = false;
    for (const auto& [a, b] : verdict.reversed_pairs) {
      if (verdict.unanimity_forced && !strictly_prefers(d, b, a)) {
        verdict.unanimity_forced = false;
        verdict.violating_slot = slot;
        verdict.violating_pair = std::pair{b, a};
      }
    }
  }
  verdict.passed = verdict.indistinguishable && verdict.unanimity_forced;
  return verdict;
}

AggregationMap extract_execution_map(const Protocol& proto, const Domain& input,
                                     const SystemParams& p, Synchrony s) {
  const int nbar = sync_process_number(p, s);
  std::uint64_t work = static_cast<std::uint64_t>(nbar);
  for (int i = 0; i < nbar; ++i) {
    work *= input.size();
    if (work > kMaxExtractionWork) {
      throw CapacityError("execution map sweep exceeds " + std::to_string(kMaxExtractionWork));
    }
  }
  return AggregationMap::tabulate(nbar, input, proto.output_domain(), [&](const Profile& in) {
    const ExecutionTrace trace = s == Synchrony::kSync ? run_sync(proto, in, {}, p)
                                                       : run_async_canonical(proto, in, p);
    Profile out;
    for (int slot = 0; slot < nbar; ++slot) out.push_back(trace.decisions.at(slot));
    return out;
  });
}

}  // namespace arrovian
