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

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrovian/aggregation.hpp"
#include "arrovian/cyclic.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/json_io.hpp"
#include "arrovian/metrics.hpp"
#include "arrovian/reproduce.hpp"
#include "arrovian/safety.hpp"
#include "arrovian/sim.hpp"
#include "arrovian/witness.hpp"

namespace arrovian::cli {

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;

  std::string kind = "kt";
  std::vector<std::string> prefs;
  int m = 0;
  int n = 0;
  int t = 0;
  int k = 0;
  int i = 0;
  std::string sync = "sync";
  std::string blocks;
  bool shuffle = false;
  std::string wo = "strict";
  std::string profile;
  std::string proto = "flood";
  std::string schedule;
  std::string task;
  std::string eps;
  std::string metric = "kt";
  std::string file;
  int only = 0;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string join(const Profile& profile, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) s += sep;
    s += format_pref(profile[i]);
  }
  return s;
}

int profile_m(const Profile& profile) { return profile_alternative_count(profile); }

int run_metric(const Options& o, std::ostream& out) {
  const MetricKind kind = parse_metric_kind(o.kind);
  const Preference a = parse_pref(o.prefs.at(0));
  const Preference b = parse_pref(o.prefs.at(1));
  const auto d = distance(kind, a, b);
  if (o.json) {
    emit(out, {{"kind", o.kind}, {"distance", d}});
  } else {
    out << d << '\n';
  }
  return kExitOk;
}

int run_diameter(const Options& o, std::ostream& out) {
  const MetricKind kind = parse_metric_kind(o.kind);
  const auto d = diameter(enumerate_strict(o.m), kind);
  if (o.json) {
    emit(out, {{"kind", o.kind}, {"m", o.m}, {"diameter", d}});
  } else {
    out << d << '\n';
  }
  return kExitOk;
}

int run_cyclic(const Options& o, std::ostream& out) {
  const BlockPartition bp = parse_blocks(o.blocks, o.m);
  const auto list = cyclic_preference_list(bp);
  const Profile as_profile(list.begin(), list.end());
  if (o.json) {
    emit(out, {{"blocks", format_blocks(bp)}, {"list", to_json(as_profile)}});
  } else {
    for (const auto& p : list) out << format_pref(p) << '\n';
  }
  return kExitOk;
}

BlockPartition contiguous_blocks(int m, int k) {
  if (k < 1 || k > m) throw ArgumentError("need 1 <= k <= m");
  std::vector<std::vector<Alternative>> blocks;
  Alternative next = 0;
  for (int b = 0; b < k; ++b) {
    const int size = m / k + (b < m % k ? 1 : 0);
    std::vector<Alternative> block(size);
    std::iota(block.begin(), block.end(), next);
    next += size;
    blocks.push_back(std::move(block));
  }
  return BlockPartition(m, std::move(blocks));
}

int run_cyclic_profile(const Options& o, std::ostream& out, std::ostream& err) {
  const SystemParams p(o.n, o.t);
  const Synchrony s = parse_synchrony(o.sync);
  if (o.blocks.empty() && o.m < 1) throw ArgumentError("give --m or --blocks");
  BlockPartition bp = BlockPartition::singletons(1);
  if (!o.blocks.empty()) {
    int m = o.m;
    if (m < 1) {
      // Alternatives are 0..max; infer m from the largest name.
      m = 0;
      std::string digits;
      for (char c : o.blocks + "|") {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          digits += c;
        } else if (!digits.empty()) {
          m = std::max(m, std::stoi(digits) + 1);
          digits.clear();
        }
      }
    }
    bp = parse_blocks(o.blocks, m);
  } else {
    bp = contiguous_blocks(o.m, o.k > 0 ? o.k : o.m);
  }
  const int nbar = sync_process_number(p, s);
  Profile profile = cyclic_profile(bp, nbar);
  if (o.shuffle) {
    std::mt19937_64 rng(o.seed);
    std::shuffle(profile.begin(), profile.end(), rng);
  }
  const int need = min_cycle_length(p, s);
  const bool admissible = bp.block_count() >= need;
  if (o.json) {
    emit(out, {{"nbar", nbar},
               {"k", bp.block_count()},
               {"blocks", format_blocks(bp)},
               {"admissible", admissible},
               {"profile", to_json(profile)}});
  } else {
    out << join(profile, ",") << '\n';
  }
  if (!admissible) {
    err << "cycle length " << bp.block_count() << " is below ceil(nbar/t) = " << need << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

Domain domain_for(const std::string& wo, int m) {
  if (wo == "strict") return enumerate_strict(m);
  if (wo == "weak") return enumerate_weak(m);
  throw ArgumentError("--wo must be strict or weak");
}

int run_safe_area(const Options& o, std::ostream& out) {
  const Profile profile = parse_profile(o.profile);
  const Domain wo = domain_for(o.wo, profile_m(profile));
  const auto area = safe_area(profile, o.i - 1, o.t, wo);
  if (o.json) {
    emit(out, {{"slot", o.i}, {"t", o.t}, {"members", to_json(Profile(area.begin(), area.end()))}});
  } else {
    for (const auto& s : area) out << format_pref(s) << '\n';
  }
  return kExitOk;
}

int run_arrow(const Options& o, std::ostream& out) {
  const ArrowEnumeration e = enumerate_arrow_maps(2, 3);
  const bool arrow_holds = e.valid > 0 && e.valid == e.dictatorial;
  if (o.json) {
    emit(out, to_json(e));
  } else {
    out << "candidates: " << e.candidates << '\n'
        << "weak-order valid: " << e.weak_order_valid << '\n'
        << "valid: " << e.valid << '\n'
        << "dictatorial: " << e.dictatorial << '\n';
    for (std::size_t i = 0; i < e.decisive_sets.size(); ++i) {
      out << "map " << i + 1 << " minimal decisive sets:";
      for (const auto& set : e.decisive_sets[i]) {
        out << " {";
        for (std::size_t j = 0; j < set.size(); ++j) out << (j ? "," : "") << set[j] + 1;
        out << '}';
      }
      out << '\n';
    }
  }
  return arrow_holds ? kExitOk : kExitFailed;
}

int run_simulate(const Options& o, std::ostream& out) {
  const SystemParams p(o.n, o.t);
  const Synchrony s = parse_synchrony(o.sync);
  const Profile profile = parse_profile(o.profile);
  const auto proto = make_protocol(o.proto, domain_for(o.wo, profile_m(profile)));
  const CrashSchedule schedule = o.schedule.empty() ? CrashSchedule{} : parse_schedule(o.schedule);
  std::optional<Task> task;
  if (!o.task.empty()) task = parse_task(o.task);

  ExecutionTrace trace;
  if (s == Synchrony::kSync) {
    trace = run_sync(*proto, profile, schedule, p);
  } else if (static_cast<int>(profile.size()) == o.n - o.t && o.schedule.empty()) {
    trace = run_async_canonical(*proto, profile, p);
  } else {
    trace = run_async_with_crashes(*proto, profile, schedule, p);
  }

  const TaskVerdict unanimity = check_unanimity_on_correct(trace);
  bool ok = unanimity.unanimity;
  std::optional<TaskVerdict> verdict;
  if (task) {
    verdict = check_task(trace, *task);
    ok = ok && verdict->passed();
  }
  if (o.json) {
    emit(out, simulate_json(trace, task));
  } else {
    for (const auto& [slot, d] : trace.decisions) {
      out << "slot " << slot + 1 << " decides " << format_pref(d) << '\n';
    }
    out << "unanimity: " << (unanimity.unanimity ? "pass" : "fail");
    if (unanimity.violating_pair) {
      out << " (slot " << *unanimity.violating_slot + 1 << " breaks "
          << unanimity.violating_pair->first << ">" << unanimity.violating_pair->second << ")";
    }
    out << '\n';
    if (verdict) {
      out << (std::holds_alternative<KSetTask>(*task) ? "kset" : "approx") << ": "
          << (verdict->agreement ? "pass" : "fail") << " (value " << verdict->value << ")\n";
    }
  }
  return ok ? kExitOk : kExitFailed;
}

void print_report(const WitnessReport& r, std::ostream& out) {
  out << "task: " << to_string(r.task) << " n=" << r.n << " t=" << r.t
      << " sync=" << to_string(r.synchrony) << " m=" << r.m;
  if (r.task == TaskKind::kKSet) {
    out << " k=" << r.k << '\n';
  } else {
    out << " eps=" << format_rational(r.eps) << " metric=" << to_string(r.metric) << '\n';
  }
  out << "j=" << r.j << " ell=" << r.ell << " delta=" << format_rational(r.delta)
      << " threshold=" << r.threshold << '\n'
      << "blocks: " << format_blocks(r.blocks) << '\n'
      << "profile: " << join(r.profile, ",") << '\n';
  out << "witness slots:";
  for (int s : r.witness_slots) out << ' ' << s + 1;
  out << (r.task == TaskKind::kKSet ? " distinct=" : " distance=") << r.witness_value << '\n';
  out << "verdict: " << (r.verified ? "verified" : "failed") << '\n';
}

int run_witness(const Options& o, std::ostream& out) {
  const SystemParams p(o.n, o.t);
  const Synchrony s = parse_synchrony(o.sync);
  const TaskKind task = parse_task_kind(o.task);
  WitnessOutcome outcome = NotApplicable{};
  if (task == TaskKind::kKSet) {
    if (o.k < 1) throw ArgumentError("k-set witnesses need --k");
    if (!o.blocks.empty()) throw ArgumentError("--blocks applies to approx witnesses");
    outcome = kset_witness(p, s, o.m, o.k);
  } else {
    if (o.eps.empty()) throw ArgumentError("approx witnesses need --eps");
    const Rational eps = parse_rational(o.eps);
    const MetricKind kind = parse_metric_kind(o.metric);
    outcome = o.blocks.empty() ? approx_witness(p, s, o.m, kind, eps)
                               : block_witness(p, s, parse_blocks(o.blocks, o.m), kind, eps);
  }
  if (const auto* na = std::get_if<NotApplicable>(&outcome)) {
    if (o.json) {
      emit(out, to_json(*na));
    } else {
      out << "not-applicable: " << na->precondition << '\n';
    }
    return kExitFailed;
  }
  const auto& report = std::get<WitnessReport>(outcome);
  if (o.json) {
    emit(out, to_json(report));
  } else {
    print_report(report, out);
  }
  return report.verified ? kExitOk : kExitFailed;
}

int run_verify_witness(const Options& o, std::ostream& out, std::ostream& err) {
  std::string text;
  if (o.file.empty() || o.file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.file);
    if (!in) throw ArgumentError("cannot read '" + o.file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  const WitnessReport report = witness_from_json(doc);
  WitnessVerdict verdict;
  try {
    verdict = verify_witness(report);
  } catch (const IntegrityError& e) {
    if (o.json) {
      emit(out, {{"verdict", "integrity-error"}, {"reason", e.what()}});
    } else {
      err << "integrity error: " << e.what() << '\n';
    }
    return kExitFailed;
  }
  if (o.json) {
    emit(out, {{"verdict", verdict.verified ? "verified" : "failed"}, {"reason", verdict.reason}});
  } else {
    out << (verdict.verified ? "verified" : "failed") << ": " << verdict.reason << '\n';
  }
  return verdict.verified ? kExitOk : kExitFailed;
}

int run_reproduce(const Options& o, std::ostream& out) {
  std::vector<CriterionResult> results;
  if (o.only > 0) {
    results.push_back(run_criterion(o.only));
  } else {
    results = run_all();
  }
  const bool all = std::all_of(results.begin(), results.end(),
                               [](const CriterionResult& r) { return r.passed; });
  if (o.json) {
    Json rows = Json::array();
    for (const auto& r : results) {
      rows.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"limit_seconds", r.limit_seconds}});
    }
    emit(out, {{"criteria", rows}, {"passed", all}});
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << std::left << std::setw(28)
          << r.name << std::fixed << std::setprecision(2) << std::right << std::setw(8)
          << r.seconds << "s / " << r.limit_seconds << "s  " << r.detail << '\n';
    }
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arrovian agreement toolkit", "aal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit one JSON document");
  app.add_option("--seed", o.seed, "Seed for --shuffle")->check(CLI::NonNegativeNumber);

  auto* metric = app.add_subcommand("metric", "Distance between two linear orders");
  metric->add_option("--kind", o.kind)->check(CLI::IsMember({"kt", "sf"}));
  metric->add_option("prefs", o.prefs)->expected(2)->required();

  auto* diam = app.add_subcommand("diameter", "Diameter of L(X)");
  diam->add_option("--kind", o.kind)->check(CLI::IsMember({"kt", "sf"}));
  diam->add_option("--m", o.m)->required();

  auto* cyc = app.add_subcommand("cyclic", "Cyclic preference list of a block partition");
  cyc->add_option("--m", o.m)->required();
  cyc->add_option("--blocks", o.blocks)->required();

  auto* cprof = app.add_subcommand("cyclic-profile", "Cyclic profile over nbar slots");
  cprof->add_option("--n", o.n)->required();
  cprof->add_option("--t", o.t)->required();
  cprof->add_option("--sync", o.sync)->check(CLI::IsMember({"sync", "async"}));
  cprof->add_option("--m", o.m);
  cprof->add_option("--k", o.k);
  cprof->add_option("--blocks", o.blocks);
  cprof->add_flag("--shuffle", o.shuffle, "Permute slots with --seed");

  auto* safe = app.add_subcommand("safe-area", "Safe area of one slot");
  safe->add_option("--t", o.t)->required();
  safe->add_option("--wo", o.wo)->check(CLI::IsMember({"strict", "weak"}));
  safe->add_option("--profile", o.profile)->required();
  safe->add_option("--i", o.i, "1-based slot")->required();

  app.add_subcommand("arrow-verify", "Enumerate IIA maps for n=2, m=3");

  auto* sim = app.add_subcommand("simulate", "Run a protocol on one execution");
  sim->add_option("--proto", o.proto)->check(CLI::IsMember({"flood", "naive-leader"}));
  sim->add_option("--n", o.n)->required();
  sim->add_option("--t", o.t)->required();
  sim->add_option("--sync", o.sync)->check(CLI::IsMember({"sync", "async"}));
  sim->add_option("--profile", o.profile)->required();
  sim->add_option("--schedule", o.schedule);
  sim->add_option("--task", o.task);
  sim->add_option("--wo", o.wo)->check(CLI::IsMember({"strict", "weak"}));

  auto* wit = app.add_subcommand("witness", "Build and verify an impossibility witness");
  wit->add_option("--task", o.task)->required()->check(CLI::IsMember({"kset", "approx"}));
  wit->add_option("--n", o.n)->required();
  wit->add_option("--t", o.t)->required();
  wit->add_option("--sync", o.sync)->check(CLI::IsMember({"sync", "async"}));
  wit->add_option("--m", o.m)->required();
  wit->add_option("--k", o.k);
  wit->add_option("--eps", o.eps);
  wit->add_option("--metric", o.metric)->check(CLI::IsMember({"kt", "sf"}));
  wit->add_option("--blocks", o.blocks);

  auto* ver = app.add_subcommand("verify-witness", "Recheck a JSON witness report");
  ver->add_option("file", o.file, "Report path, or - for stdin");

  auto* rep = app.add_subcommand("reproduce", "Run the acceptance experiments");
  rep->add_option("--only", o.only, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "metric") return run_metric(o, out);
    if (name == "diameter") return run_diameter(o, out);
    if (name == "cyclic") return run_cyclic(o, out);
    if (name == "cyclic-profile") return run_cyclic_profile(o, out, err);
    if (name == "safe-area") return run_safe_area(o, out);
    if (name == "arrow-verify") return run_arrow(o, out);
    if (name == "simulate") return run_simulate(o, out);
    if (name == "witness") return run_witness(o, out);
    if (name == "verify-witness") return run_verify_witness(o, out, err);
    return run_reproduce(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace arrovian::cli
