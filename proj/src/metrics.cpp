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

#include "arrovian/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "arrovian/errors.hpp"

namespace arrovian {
namespace {

void check_comparable(const Preference& r, const Preference& s) {
  if (r.size() != s.size()) {
    throw ArgumentError("preferences over different alternative sets");
  }
  if (!r.is_strict() || !s.is_strict()) {
    throw DomainError("rank metrics are defined on strict preferences");
  }
}

}  // namespace

std::string_view to_string(MetricKind kind) {
  return kind == MetricKind::kKendallTau ? "kt" : "sf";
}

MetricKind parse_metric_kind(std::string_view text) {
  if (text == "kt" || text == "KT") return MetricKind::kKendallTau;
  if (text == "sf" || text == "SF") return MetricKind::kSpearmanFootrule;
  throw ArgumentError("unknown metric '" + std::string(text) + "'");
}

std::int64_t kendall_tau(const Preference& r, const Preference& s) {
  check_comparable(r, s);
  const auto& lr = r.levels();
  const auto& ls = s.levels();
  std::int64_t discordant = 0;
  for (std::size_t a = 0; a < lr.size(); ++a) {
    for (std::size_t b = a + 1; b < lr.size(); ++b) {
      if ((lr[a] < lr[b]) != (ls[a] < ls[b])) ++discordant;
    }
  }
  return discordant;
}

std::int64_t spearman_footrule(const Preference& r, const Preference& s) {
  check_comparable(r, s);
  // For strict preferences the rank of a is its level plus one.
  std::int64_t total = 0;
  for (std::size_t a = 0; a < r.levels().size(); ++a) {
    total += std::abs(r.levels()[a] - s.levels()[a]);
  }
  return total;
}

std::int64_t distance(MetricKind kind, const Preference& r, const Preference& s) {
  return kind == MetricKind::kKendallTau ? kendall_tau(r, s)
                                         : spearman_footrule(r, s);
}

std::int64_t diameter(std::span<const Preference> points, MetricKind kind) {
  if (points.empty()) throw ArgumentError("diameter of an empty set");
  std::int64_t best = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      best = std::max(best, distance(kind, points[i], points[j]));
    }
  }
  return best;
}

std::int64_t diameter(const Domain& domain, MetricKind kind) {
  return diameter(std::span<const Preference>(domain.members()), kind);
}

std::int64_t profile_diameter(const Profile& profile, MetricKind kind) {
  std::vector<Preference> distinct(profile);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return diameter(std::span<const Preference>(distinct), kind);
}

}  // namespace arrovian
