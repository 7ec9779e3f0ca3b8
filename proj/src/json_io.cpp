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

#include "arrovian/json_io.hpp"

#include <string>

#include "arrovian/errors.hpp"

namespace arrovian {

namespace {

Json slots_json(const std::vector<int>& slots) {
  Json out = Json::array();
  for (int s : slots) out.push_back(s + 1);
  return out;
}

Json slots_json(const std::set<int>& slots) {
  return slots_json(std::vector<int>(slots.begin(), slots.end()));
}

Json pair_json(const std::optional<std::pair<Alternative, Alternative>>& pair) {
  if (!pair) return nullptr;
  return Json::array({pair->first, pair->second});
}

Json slot_json(const std::optional<int>& slot) {
  if (!slot) return nullptr;
  return *slot + 1;
}

}  // namespace

Json to_json(const Profile& profile) {
  Json out = Json::array();
  for (const auto& p : profile) out.push_back(format_pref(p));
  return out;
}

Json to_json(const std::vector<std::vector<Preference>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(to_json(Profile(s.begin(), s.end())));
  return out;
}

Json unanimity_json(const TaskVerdict& verdict) {
  return {{"passed", verdict.unanimity},
          {"pair", pair_json(verdict.violating_pair)},
          {"slot", slot_json(verdict.violating_slot)}};
}

Json to_json(const TaskVerdict& verdict, const Task& task) {
  if (const auto* kset = std::get_if<KSetTask>(&task)) {
    return {{"k", kset->k},
            {"passed", verdict.agreement},
            {"distinct", verdict.value},
            {"slots", slots_json(verdict.witness_slots)}};
  }
  const auto& approx = std::get<ApproxTask>(task);
  return {{"eps", format_rational(approx.eps)},
          {"metric", std::string(to_string(approx.metric))},
          {"passed", verdict.agreement},
          {"distance", verdict.value},
          {"slots", slots_json(verdict.witness_slots)}};
}

Json simulate_json(const ExecutionTrace& trace, const std::optional<Task>& task) {
  Json inputs = Json::array();
  for (const auto& in : trace.inputs) {
    inputs.push_back(in ? Json(format_pref(*in)) : Json(nullptr));
  }
  Json decisions = Json::object();
  for (const auto& [slot, d] : trace.decisions) decisions[std::to_string(slot + 1)] = format_pref(d);

  Json verdicts = {{"unanimity", unanimity_json(check_unanimity_on_correct(trace))},
                   {"kset", nullptr},
                   {"approx", nullptr}};
  if (task) {
    const TaskVerdict v = check_task(trace, *task);
    verdicts[std::holds_alternative<KSetTask>(*task) ? "kset" : "approx"] = to_json(v, *task);
  }
  return {{"n", trace.n},
          {"t", trace.t},
          {"sync", std::string(to_string(trace.synchrony))},
          {"inputs", inputs},
          {"correct_set", slots_json(trace.correct_set)},
          {"schedule", format_schedule(trace.schedule)},
          {"delayed", slots_json(trace.delayed)},
          {"rounds", trace.rounds.size()},
          {"decisions", decisions},
          {"verdicts", verdicts}};
}

Json to_json(const WitnessReport& r) {
  Json params = {{"task", std::string(to_string(r.task))},
                 {"n", r.n},
                 {"t", r.t},
                 {"sync", std::string(to_string(r.synchrony))},
                 {"profile_sync", std::string(to_string(r.profile_synchrony))},
                 {"m", r.m},
                 {"output_domain", r.weak_output ? "weak" : "strict"}};
  Json witness = {{"slots", slots_json(r.witness_slots)}};
  if (r.task == TaskKind::kKSet) {
    params["k"] = r.k;
    witness["distinct"] = r.witness_value;
  } else {
    params["eps"] = format_rational(r.eps);
    params["metric"] = std::string(to_string(r.metric));
    witness["distance"] = r.witness_value;
  }
  return {{"params", params},
          {"j", r.j},
          {"ell", r.ell},
          {"delta", format_rational(r.delta)},
          {"delta_bound", r.delta_bound ? Json(format_rational(*r.delta_bound)) : Json(nullptr)},
          {"blocks", format_blocks(r.blocks)},
          {"threshold", r.threshold},
          {"profile", to_json(r.profile)},
          {"safe_areas", to_json(r.safe_areas)},
          {"witness", witness},
          {"verdict", r.verified ? "verified" : "failed"}};
}

Json to_json(const NotApplicable& na) {
  return {{"verdict", "not-applicable"}, {"precondition", na.precondition}};
}

WitnessReport witness_from_json(const Json& doc) {
  try {
    WitnessReport r;
    const Json& params = doc.at("params");
    r.task = parse_task_kind(params.at("task").get<std::string>());
    r.n = params.at("n").get<int>();
    r.t = params.at("t").get<int>();
    r.synchrony = parse_synchrony(params.at("sync").get<std::string>());
    r.profile_synchrony = parse_synchrony(params.at("profile_sync").get<std::string>());
    r.m = params.at("m").get<int>();
    const std::string wo = params.at("output_domain").get<std::string>();
    if (wo != "weak" && wo != "strict") throw ParseError("unknown output domain '" + wo + "'", 0);
    r.weak_output = wo == "weak";
    const Json& witness = doc.at("witness");
    if (r.task == TaskKind::kKSet) {
      r.k = params.at("k").get<int>();
      r.witness_value = witness.at("distinct").get<std::int64_t>();
    } else {
      r.eps = parse_rational(params.at("eps").get<std::string>());
      r.metric = parse_metric_kind(params.at("metric").get<std::string>());
      r.witness_value = witness.at("distance").get<std::int64_t>();
    }
    for (int s : witness.at("slots").get<std::vector<int>>()) r.witness_slots.push_back(s - 1);

    r.j = doc.at("j").get<int>();
    r.ell = doc.at("ell").get<int>();
    r.delta = parse_rational(doc.at("delta").get<std::string>());
    if (!doc.at("delta_bound").is_null()) {
      r.delta_bound = parse_rational(doc.at("delta_bound").get<std::string>());
    }
    r.blocks = parse_blocks(doc.at("blocks").get<std::string>(), r.m);
    r.threshold = doc.at("threshold").get<std::int64_t>();
    const AlternativeSet names(r.m);
    for (const auto& p : doc.at("profile")) r.profile.push_back(parse_pref(p.get<std::string>(), names));
    for (const auto& area : doc.at("safe_areas")) {
      std::vector<Preference> members;
      for (const auto& p : area) members.push_back(parse_pref(p.get<std::string>(), names));
      r.safe_areas.push_back(std::move(members));
    }
    const std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict != "verified" && verdict != "failed") {
      throw ParseError("unknown verdict '" + verdict + "'", 0);
    }
    r.verified = verdict == "verified";
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed witness report: ") + e.what(), 0);
  }
}

Json to_json(const ArrowEnumeration& e) {
  Json sets = Json::array();
  for (const auto& per_map : e.decisive_sets) {
    Json map_sets = Json::array();
    for (const auto& s : per_map) map_sets.push_back(slots_json(s));
    sets.push_back(map_sets);
  }
  return {{"candidates", e.candidates},
          {"weak_order_valid", e.weak_order_valid},
          {"valid", e.valid},
          {"dictatorial", e.dictatorial},
          {"decisive_sets", sets}};
}

Json to_json(const PerfectSyncReport& r) {
  Json maps = Json::array();
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    maps.push_back({{"dictators", slots_json(r.assignments[i].delta)},
                    {"unanimity_and_iia", static_cast<bool>(r.unanimity_and_iia[i])}});
  }
  auto eps_list = [](const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(format_rational(v));
    return out;
  };
  return {{"maps", maps},
          {"consensus", r.consensus},
          {"consensus_dictatorial", r.consensus_dictatorial},
          {"kt_agreeing", r.kt_agreeing},
          {"sf_agreeing", r.sf_agreeing},
          {"kt_eps_tested", eps_list(r.kt_eps_tested)},
          {"sf_eps_tested", eps_list(r.sf_eps_tested)},
          {"passed", r.passed}};
}

Json to_json(const CyclicSafetyVerdict& v) {
  return {{"passed", v.passed},
          {"k", v.k},
          {"blocks", format_blocks(v.blocks)},
          {"violating_slot", slot_json(v.violating_slot)},
          {"violating_area", to_json(Profile(v.violating_area.begin(), v.violating_area.end()))}};
}

Json to_json(const ProbeVerdict& v) {
  auto decisions = [](const std::map<int, Preference>& d) {
    Json out = Json::object();
    for (const auto& [slot, p] : d) out[std::to_string(slot + 1)] = format_pref(p);
    return out;
  };
  Json pairs = Json::array();
  for (const auto& [a, b] : v.reversed_pairs) pairs.push_back(Json::array({a, b}));
  return {{"passed", v.passed},
          {"indistinguishable", v.indistinguishable},
          {"unanimity_forced", v.unanimity_forced},
          {"reversed_pairs", pairs},
          {"decisions", decisions(v.decisions)},
          {"decisions_faulty", decisions(v.decisions_faulty)},
          {"violating_slot", slot_json(v.violating_slot)},
          {"violating_pair", pair_json(v.violating_pair)}};
}

}  // namespace arrovian
