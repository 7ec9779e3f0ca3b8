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

#ifndef ARROVIAN_JSON_IO_HPP_
#define ARROVIAN_JSON_IO_HPP_

// JSON documents for the command-line surface. Slot numbers are 1-based;
// preferences are serialized in the text grammar of parse_pref.

#include <optional>

#include <json.hpp>

#include "arrovian/aggregation.hpp"
#include "arrovian/safety.hpp"
#include "arrovian/sim.hpp"
#include "arrovian/witness.hpp"

namespace arrovian {

using Json = nlohmann::json;

Json to_json(const Profile& profile);
Json to_json(const std::vector<std::vector<Preference>>& sets);
Json to_json(const TaskVerdict& verdict, const Task& task);
Json unanimity_json(const TaskVerdict& verdict);

/// {inputs, correct_set, schedule, decisions, verdicts:{unanimity, kset, approx}}
Json simulate_json(const ExecutionTrace& trace, const std::optional<Task>& task);

Json to_json(const WitnessReport& report);
Json to_json(const NotApplicable& na);
/// Throws ParseError on malformed documents.
WitnessReport witness_from_json(const Json& doc);

/// {candidates, valid, dictatorial, decisive_sets}
Json to_json(const ArrowEnumeration& e);
Json to_json(const PerfectSyncReport& r);
Json to_json(const CyclicSafetyVerdict& v);
Json to_json(const ProbeVerdict& v);

}  // namespace arrovian

#endif  // ARROVIAN_JSON_IO_HPP_
