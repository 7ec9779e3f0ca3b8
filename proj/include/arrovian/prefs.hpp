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

#ifndef ARROVIAN_PREFS_HPP_
#define ARROVIAN_PREFS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arrovian {

/// Dense 0-based index of an alternative. Names are presentation only.
using Alternative = int;

inline constexpr int kMaxStrictEnumeration = 8;
inline constexpr int kMaxWeakEnumeration = 6;

/**
 * Display names for the m alternatives of a problem instance.
 *
 * Names are non-empty, pairwise distinct and never contain the separator
 * characters of the preference grammar ('>', '=', ',', '|').
 */
class AlternativeSet {
 public:
  /// Default names "0" .. "m-1".
  explicit AlternativeSet(int m);
  explicit AlternativeSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Alternative a) const;
  std::optional<Alternative> find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

/**
 * A weak order (complete, reflexive, transitive) over m alternatives.
 *
 * Stored as a level per alternative; a lower level is more preferred and
 * alternatives sharing a level are tied. The occupied levels always form the
 * contiguous range 0..L-1, so every value of this type is a valid weak order.
 * A preference is strict exactly when its levels are a permutation of 0..m-1.
 */
class Preference {
 public:
  Preference() = default;

  /// Throws ArgumentError unless `levels` is already canonical.
  static Preference from_levels(std::vector<int> levels);
  /// Compresses arbitrary non-negative levels into canonical form.
  static Preference canonicalize(std::span<const int> raw_levels);
  /// Strict order from a ranking; `ranking[0]` is the top alternative.
  static Preference from_ranking(std::span<const Alternative> ranking);

  int size() const { return static_cast<int>(levels_.size()); }
  int level(Alternative a) const;
  int level_count() const { return level_count_; }
  bool is_strict() const { return level_count_ == size(); }
  const std::vector<int>& levels() const { return levels_; }

  /// Alternatives sorted best first; ties broken by index.
  std::vector<Alternative> ranking() const;

  friend bool operator==(const Preference& a, const Preference& b) {
    return a.levels_ == b.levels_;
  }
  /// Lexicographic on the level vector. Used for canonical set ordering.
  friend bool operator<(const Preference& a, const Preference& b) {
    return a.levels_ < b.levels_;
  }

 private:
  explicit Preference(std::vector<int> levels, int level_count)
      : levels_(std::move(levels)), level_count_(level_count) {}

  std::vector<int> levels_;
  int level_count_ = 0;
};

/// Ordered sequence of preferences, one per process slot.
using Profile = std::vector<Preference>;

/// Relative order of a pair (a, b): a above b, b above a, or tied.
enum class PairOrder : unsigned char { kAbove = 0, kBelow = 1, kTie = 2 };

/**
 * A finite set of preferences over a common alternative count.
 *
 * Members are kept sorted and duplicate-free, so two domains with the same
 * members compare equal regardless of construction order.
 */
class Domain {
 public:
  Domain(int m, std::vector<Preference> members);

  int alternative_count() const { return m_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Preference& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Preference>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Preference& p) const;
  std::optional<std::size_t> index_of(const Preference& p) const;
  bool all_strict() const;

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.m_ == b.m_ && a.members_ == b.members_;
  }

 private:
  int m_;
  std::vector<Preference> members_;
};

bool strictly_prefers(const Preference& p, Alternative a, Alternative b);
bool weakly_prefers(const Preference& p, Alternative a, Alternative b);
PairOrder pair_order(const Preference& p, Alternative a, Alternative b);

/// Restriction to `subset`; the result is indexed by the sorted subset.
Preference restrict(const Preference& p, std::span<const Alternative> subset);

/// Number of alternatives weakly above `a`, counting `a` itself.
/// Throws DomainError for non-strict `p`.
int rank(const Preference& p, Alternative a);

/// All m! strict orders. m must lie in [1, kMaxStrictEnumeration].
Domain enumerate_strict(int m);
/// All weak orders (ordered Bell many). m must lie in [1, kMaxWeakEnumeration].
Domain enumerate_weak(int m);

/// True iff some pair is strictly ordered one way by one member and the
/// other way by another.
bool is_non_trivial(const Domain& domain);

Preference parse_pref(std::string_view text, const AlternativeSet& alternatives);
/// Parses with default names; m is the number of names in `text`.
Preference parse_pref(std::string_view text);
std::string format_pref(const Preference& p, const AlternativeSet& alternatives);
std::string format_pref(const Preference& p);

/// Comma-separated preferences, e.g. "0>1>2,2>1>0".
Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& profile);

/// Alternative count shared by all entries; throws ArgumentError if the
/// profile is empty or mixes alternative counts.
int profile_alternative_count(const Profile& profile);

}  // namespace arrovian

#endif  // ARROVIAN_PREFS_HPP_
