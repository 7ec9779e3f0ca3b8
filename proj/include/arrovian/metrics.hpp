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

#ifndef ARROVIAN_METRICS_HPP_
#define ARROVIAN_METRICS_HPP_

#include <cstdint>
#include <span>
#include <string_view>

#include "arrovian/prefs.hpp"

namespace arrovian {

/// Rank distances on strict preferences.
enum class MetricKind { kKendallTau, kSpearmanFootrule };

std::string_view to_string(MetricKind kind);
/// Accepts "kt" or "sf".
MetricKind parse_metric_kind(std::string_view text);

/// Number of unordered pairs ranked in opposite directions.
std::int64_t kendall_tau(const Preference& r, const Preference& s);
/// Sum over alternatives of the absolute rank difference.
std::int64_t spearman_footrule(const Preference& r, const Preference& s);
std::int64_t distance(MetricKind kind, const Preference& r, const Preference& s);

/// Largest pairwise distance among `points` (duplicates are harmless).
/// Throws ArgumentError on an empty span.
std::int64_t diameter(std::span<const Preference> points, MetricKind kind);
std::int64_t diameter(const Domain& domain, MetricKind kind);
std::int64_t profile_diameter(const Profile& profile, MetricKind kind);

}  // namespace arrovian

#endif  // ARROVIAN_METRICS_HPP_
