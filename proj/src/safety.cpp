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

#include "arrovian/safety.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "arrovian/errors.hpp"

namespace arrovian {

ConstraintSet::ConstraintSet(int m) : m_(m), required_(std::size_t(m) * m, false) {}

void ConstraintSet::add(Alternative a, Alternative b) {
  if (a < 0 || b < 0 || a >= m_ || b >= m_ || a == b) {
    throw ArgumentError("invalid constraint pair");
  }
  required_[a * m_ + b] = true;
}

bool ConstraintSet::contains(Alternative a, Alternative b) const {
  return required_.at(a * m_ + b);
}

void ConstraintSet::merge(const ConstraintSet& other) {
  if (other.m_ != m_) throw ArgumentError("constraint sets over different m");
  for (std::size_t i = 0; i < required_.size(); ++i) {
    if (other.required_[i]) required_[i] = true;
  }
}

bool ConstraintSet::consistent() const {
  for (Alternative a = 0; a < m_; ++a) {
    for (Alternative b = a + 1; b < m_; ++b) {
      if (contains(a, b) && contains(b, a)) return false;
    }
  }
  return true;
}

bool ConstraintSet::satisfied_by(const Preference& p) const {
  for (Alternative a = 0; a < m_; ++a) {
    for (Alternative b = 0; b < m_; ++b) {
      if (required_[a * m_ + b] && !strictly_prefers(p, a, b)) return false;
    }
  }
  return true;
}

std::vector<std::pair<Alternative, Alternative>> ConstraintSet::pairs() const {
  std::vector<std::pair<Alternative, Alternative>> out;
  for (Alternative a = 0; a < m_; ++a) {
    for (Alternative b = 0; b < m_; ++b) {
      if (required_[a * m_ + b]) out.emplace_back(a, b);
    }
  }
  return out;
}

ConstraintSet unanimous_pairs(std::span<const Preference> members) {
  if (members.empty()) throw ArgumentError("unanimity of an empty set");
  const int m = members.front().size();
  ConstraintSet constraints(m);
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = 0; b < m; ++b) {
      if (a == b) continue;
      const bool unanimous = std::all_of(members.begin(), members.end(), [&](const Preference& p) {
        if (p.size() != m) throw ArgumentError("members over different alternative sets");
        return strictly_prefers(p, a, b);
      });
      if (unanimous) constraints.add(a, b);
    }
  }
  return constraints;
}

namespace {

std::vector<Preference> filter(const ConstraintSet& constraints, const Domain& output) {
  if (output.alternative_count() != constraints.alternative_count()) {
    throw ArgumentError("output domain over a different alternative set");
  }
  std::vector<Preference> out;
  for (const auto& s : output) {
    if (constraints.satisfied_by(s)) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Preference> unanimity_set(std::span<const Preference> members,
                                      const Domain& output) {
  return filter(unanimous_pairs(members), output);
}

std::vector<Preference> safe_area(std::span<const Preference> members, int i, int t,
                                  const Domain& output) {
  const int size = static_cast<int>(members.size());
  if (size > kMaxSafeAreaSlots) {
    throw CapacityError("safe area supports at most " +
                        std::to_string(kMaxSafeAreaSlots) + " slots");
  }
  if (t < 0 || size <= t) {
    throw ArgumentError("safe area needs |J| > t (|J|=" + std::to_string(size) +
                        ", t=" + std::to_string(t) + ")");
  }
  if (i < 0 || i >= size) throw ArgumentError("safe area index out of range");

  // S lies in every unanimity set iff it satisfies the union of their
  // constraints, so one filter pass over W_O suffices.
  const int subset_size = size - t;
  ConstraintSet all(members.front().size());
  std::vector<Preference> subset;
  for (unsigned mask = 0; mask < (1u << size); ++mask) {
    if (!(mask & (1u << i)) || std::popcount(mask) != subset_size) continue;
    subset.clear();
    for (int s = 0; s < size; ++s) {
      if (mask & (1u << s)) subset.push_back(members[s]);
    }
    all.merge(unanimous_pairs(subset));
  }
  return filter(all, output);
}

CheckResult check_u_unanimity(const AggregationMap& f, int u) {
  const int m = f.input_domain().alternative_count();
  for (std::size_t idx = 0; idx < f.profile_count(); ++idx) {
    const Profile in = f.input_profile(idx);
    const Profile& out = f.output(idx);
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        if (a == b) continue;
        int agreeing = 0;
        for (const auto& p : in) agreeing += strictly_prefers(p, a, b) ? 1 : 0;
        if (agreeing < u) continue;
        for (int i = 0; i < f.slot_count(); ++i) {
          if (strictly_prefers(in[i], a, b) && !strictly_prefers(out[i], a, b)) {
            return {false, Counterexample{in, out, {}, {}, std::pair{a, b}, i}};
          }
        }
      }
    }
  }
  return {};
}

CyclicSafetyVerdict verify_cyclic_safe(const Profile& profile, const SystemParams& p,
                                       Synchrony s, const Domain& output) {
  const auto k = in_cyclic_family(profile, p, s);
  if (!k) {
    throw ArgumentError("profile " + format_profile(profile) +
                        " is not in the cyclic family");
  }
  CyclicSafetyVerdict verdict{true, *k, *match_cyclic_profile(profile, *k), {}, {}};
  for (int i = 0; i < static_cast<int>(profile.size()); ++i) {
    auto area = safe_area(profile, i, p.t, output);
    std::vector<Preference> expected;
    if (output.contains(profile[i])) expected.push_back(profile[i]);
    if (area != expected) {
      verdict.passed = false;
      verdict.violating_slot = i;
      verdict.violating_area = std::move(area);
      break;
    }
  }
  return verdict;
}

}  // namespace arrovian
