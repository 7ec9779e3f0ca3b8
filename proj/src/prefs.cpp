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

#include "arrovian/prefs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arrovian/errors.hpp"

namespace arrovian {
namespace {

constexpr std::string_view kReservedChars = ">=,|";

bool is_space(char c) { return c == ' ' || c == '\t'; }

void check_alternative(const Preference& p, Alternative a) {
  if (a < 0 || a >= p.size()) {
    throw ArgumentError("alternative index " + std::to_string(a) +
                        " out of range for m=" + std::to_string(p.size()));
  }
}

struct Token {
  std::string name;
  std::size_t position;
};

// One group per '>'-separated segment, each a list of '='-separated names.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> groups(1);
  std::size_t i = 0;
  bool expect_name = true;
  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '>' || c == '=') {
      if (expect_name) throw ParseError("expected alternative name", i);
      if (c == '>') groups.emplace_back();
      expect_name = true;
      ++i;
      continue;
    }
    if (kReservedChars.find(c) != std::string_view::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    if (!expect_name) throw ParseError("expected '>' or '='", i);
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i]) &&
           kReservedChars.find(text[i]) == std::string_view::npos) {
      ++i;
    }
    groups.back().push_back({std::string(text.substr(start, i - start)), start});
    expect_name = false;
  }
  if (expect_name) throw ParseError("expected alternative name", text.size());
  return groups;
}

}  // namespace

AlternativeSet::AlternativeSet(int m) {
  if (m < 1) throw ArgumentError("alternative count must be positive");
  names_.reserve(m);
  for (int a = 0; a < m; ++a) names_.push_back(std::to_string(a));
}

AlternativeSet::AlternativeSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty()) throw ArgumentError("alternative count must be positive");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ArgumentError("empty alternative name");
    if (n.find_first_of(kReservedChars) != std::string::npos ||
        std::any_of(n.begin(), n.end(), is_space)) {
      throw ArgumentError("alternative name '" + n +
                          "' contains a reserved character");
    }
    if (!seen.insert(n).second) {
      throw ArgumentError("duplicate alternative name '" + n + "'");
    }
  }
}

const std::string& AlternativeSet::name(Alternative a) const {
  if (a < 0 || a >= size()) throw ArgumentError("alternative out of range");
  return names_[a];
}

std::optional<Alternative> AlternativeSet::find(std::string_view name) const {
  for (int a = 0; a < size(); ++a) {
    if (names_[a] == name) return a;
  }
  return std::nullopt;
}

Preference Preference::from_levels(std::vector<int> levels) {
  if (levels.empty()) throw ArgumentError("preference over zero alternatives");
  const int m = static_cast<int>(levels.size());
  std::vector<bool> used(m, false);
  for (int l : levels) {
    if (l < 0 || l >= m) throw ArgumentError("level out of range");
    used[l] = true;
  }
  int count = 0;
  while (count < m && used[count]) ++count;
  for (int l = count; l < m; ++l) {
    if (used[l]) throw ArgumentError("levels are not contiguous from 0");
  }
  return Preference(std::move(levels), count);
}

Preference Preference::canonicalize(std::span<const int> raw_levels) {
  if (raw_levels.empty()) {
    throw ArgumentError("preference over zero alternatives");
  }
  std::vector<int> distinct(raw_levels.begin(), raw_levels.end());
  if (std::any_of(distinct.begin(), distinct.end(), [](int l) { return l < 0; })) {
    throw ArgumentError("negative level");
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> levels;
  levels.reserve(raw_levels.size());
  for (int l : raw_levels) {
    levels.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), l) - distinct.begin()));
  }
  return Preference(std::move(levels), static_cast<int>(distinct.size()));
}

Preference Preference::from_ranking(std::span<const Alternative> ranking) {
  const int m = static_cast<int>(ranking.size());
  std::vector<int> levels(m, -1);
  for (int pos = 0; pos < m; ++pos) {
    Alternative a = ranking[pos];
    if (a < 0 || a >= m || levels[a] != -1) {
      throw ArgumentError("ranking is not a permutation of 0..m-1");
    }
    levels[a] = pos;
  }
  return from_levels(std::move(levels));
}

int Preference::level(Alternative a) const {
  check_alternative(*this, a);
  return levels_[a];
}

std::vector<Alternative> Preference::ranking() const {
  std::vector<Alternative> order(levels_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](Alternative a, Alternative b) {
    return levels_[a] < levels_[b];
  });
  return order;
}

Domain::Domain(int m, std::vector<Preference> members)
    : m_(m), members_(std::move(members)) {
  if (m < 1) throw ArgumentError("alternative count must be positive");
  for (const auto& p : members_) {
    if (p.size() != m) {
      throw ArgumentError("domain member over " + std::to_string(p.size()) +
                          " alternatives, expected " + std::to_string(m));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Domain::contains(const Preference& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

std::optional<std::size_t> Domain::index_of(const Preference& p) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), p);
  if (it == members_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool Domain::all_strict() const {
  return std::all_of(members_.begin(), members_.end(),
                     [](const Preference& p) { return p.is_strict(); });
}

bool strictly_prefers(const Preference& p, Alternative a, Alternative b) {
  return p.level(a) < p.level(b);
}

bool weakly_prefers(const Preference& p, Alternative a, Alternative b) {
  return p.level(a) <= p.level(b);
}

PairOrder pair_order(const Preference& p, Alternative a, Alternative b) {
  const int la = p.level(a);
  const int lb = p.level(b);
  if (la < lb) return PairOrder::kAbove;
  if (lb < la) return PairOrder::kBelow;
  return PairOrder::kTie;
}

Preference restrict(const Preference& p, std::span<const Alternative> subset) {
  if (subset.empty()) throw ArgumentError("restriction to an empty set");
  std::vector<Alternative> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("restriction subset has duplicates");
  }
  std::vector<int> raw;
  raw.reserve(sorted.size());
  for (Alternative a : sorted) raw.push_back(p.level(a));
  return Preference::canonicalize(raw);
}

int rank(const Preference& p, Alternative a) {
  if (!p.is_strict()) throw DomainError("rank is defined on strict preferences");
  const int la = p.level(a);
  int count = 0;
  for (int l : p.levels()) count += (l <= la) ? 1 : 0;
  return count;
}

Domain enumerate_strict(int m) {
  if (m < 1 || m > kMaxStrictEnumeration) {
    throw CapacityError("strict enumeration supports 1 <= m <= " +
                        std::to_string(kMaxStrictEnumeration));
  }
  std::vector<int> levels(m);
  std::iota(levels.begin(), levels.end(), 0);
  std::vector<Preference> members;
  do {
    members.push_back(Preference::from_levels(levels));
  } while (std::next_permutation(levels.begin(), levels.end()));
  return Domain(m, std::move(members));
}

namespace {

// Extends `levels[0..a)` so that, once complete, levels 0..used-1 are all
// occupied: the remaining alternatives must be able to fill the gap.
void extend_weak(int m, int a, int max_level, std::vector<int>& levels,
                 std::vector<int>& counts, std::vector<Preference>& out) {
  if (a == m) {
    for (int l = 0; l <= max_level; ++l) {
      if (counts[l] == 0) return;
    }
    out.push_back(Preference::from_levels(levels));
    return;
  }
  for (int l = 0; l < m; ++l) {
    levels[a] = l;
    ++counts[l];
    extend_weak(m, a + 1, std::max(max_level, l), levels, counts, out);
    --counts[l];
  }
}

}  // namespace

Domain enumerate_weak(int m) {
  if (m < 1 || m > kMaxWeakEnumeration) {
    throw CapacityError("weak enumeration supports 1 <= m <= " +
                        std::to_string(kMaxWeakEnumeration));
  }
  std::vector<int> levels(m, 0);
  std::vector<int> counts(m, 0);
  std::vector<Preference> members;
  extend_weak(m, 0, -1, levels, counts, members);
  return Domain(m, std::move(members));
}

bool is_non_trivial(const Domain& domain) {
  const int m = domain.alternative_count();
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = a + 1; b < m; ++b) {
      bool above = false;
      bool below = false;
      for (const auto& p : domain) {
        PairOrder o = pair_order(p, a, b);
        above |= o == PairOrder::kAbove;
        below |= o == PairOrder::kBelow;
      }
      if (above && below) return true;
    }
  }
  return false;
}

Preference parse_pref(std::string_view text, const AlternativeSet& alternatives) {
  const auto groups = tokenize(text);
  const int m = alternatives.size();
  std::vector<int> levels(m, -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const Token& tok : groups[g]) {
      auto a = alternatives.find(tok.name);
      if (!a) throw ParseError("unknown alternative '" + tok.name + "'", tok.position);
      if (levels[*a] != -1) {
        throw ParseError("duplicate alternative '" + tok.name + "'", tok.position);
      }
      levels[*a] = static_cast<int>(g);
    }
  }
  for (int a = 0; a < m; ++a) {
    if (levels[a] == -1) {
      throw ParseError("missing alternative '" + alternatives.name(a) + "'",
                       text.size());
    }
  }
  return Preference::from_levels(std::move(levels));
}

Preference parse_pref(std::string_view text) {
  const auto groups = tokenize(text);
  int m = 0;
  for (const auto& g : groups) m += static_cast<int>(g.size());
  return parse_pref(text, AlternativeSet(m));
}

std::string format_pref(const Preference& p, const AlternativeSet& alternatives) {
  if (alternatives.size() != p.size()) {
    throw ArgumentError("alternative set size does not match preference");
  }
  std::string out;
  const auto order = p.ranking();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += p.level(order[i]) == p.level(order[i - 1]) ? '=' : '>';
    out += alternatives.name(order[i]);
  }
  return out;
}

std::string format_pref(const Preference& p) {
  return format_pref(p, AlternativeSet(p.size()));
}

Profile parse_profile(std::string_view text) {
  Profile profile;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    try {
      profile.push_back(parse_pref(part));
    } catch (const ParseError& e) {
      throw ParseError("in profile entry " + std::to_string(profile.size() + 1) +
                           ": " + e.detail(),
                       start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  profile_alternative_count(profile);
  return profile;
}

std::string format_profile(const Profile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += ',';
    out += format_pref(profile[i]);
  }
  return out;
}

int profile_alternative_count(const Profile& profile) {
  if (profile.empty()) throw ArgumentError("empty profile");
  const int m = profile.front().size();
  for (const auto& p : profile) {
    if (p.size() != m) throw ArgumentError("profile mixes alternative counts");
  }
  return m;
}

}  // namespace arrovian
