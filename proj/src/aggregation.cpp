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

#include "arrovian/aggregation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "arrovian/errors.hpp"
#include "arrovian/parallel.hpp"

namespace arrovian {
namespace {

std::size_t pow3(int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

std::size_t pair_key(const Profile& profile, Alternative a, Alternative b) {
  std::size_t key = 0;
  for (const auto& p : profile) key = key * 3 + static_cast<std::size_t>(pair_order(p, a, b));
  return key;
}

bool all_strictly_prefer(const Profile& profile, Alternative a, Alternative b) {
  return std::all_of(profile.begin(), profile.end(), [&](const Preference& p) {
    return strictly_prefers(p, a, b);
  });
}

std::size_t distinct_count(const Profile& profile) {
  std::set<Preference> distinct(profile.begin(), profile.end());
  return distinct.size();
}

}  // namespace

std::vector<AlternativePair> all_pairs(int m) {
  std::vector<AlternativePair> pairs;
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = a + 1; b < m; ++b) pairs.push_back({a, b});
  }
  return pairs;
}

std::optional<Preference> preference_from_pair_orders(
    int m, std::span<const PairOrder> orders) {
  const auto pairs = all_pairs(m);
  if (orders.size() != pairs.size()) {
    throw ArgumentError("expected one pair order per unordered pair");
  }
  // Candidate level: number of alternatives strictly above. If the relation
  // is a weak order these levels reproduce it; otherwise some pair differs.
  std::vector<int> above(m, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (orders[p] == PairOrder::kAbove) ++above[pairs[p].second];
    if (orders[p] == PairOrder::kBelow) ++above[pairs[p].first];
  }
  Preference candidate = Preference::canonicalize(above);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (pair_order(candidate, pairs[p].first, pairs[p].second) != orders[p]) {
      return std::nullopt;
    }
  }
  return candidate;
}

std::size_t profile_space_size(const Domain& domain, int n) {
  if (n < 1) throw ArgumentError("profile length must be positive");
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (domain.size() != 0 && size > kMaxProfileSpace / domain.size()) {
      throw CapacityError("profile space exceeds " + std::to_string(kMaxProfileSpace));
    }
    size *= domain.size();
  }
  return size;
}

Profile profile_at(const Domain& domain, int n, std::size_t index) {
  Profile profile(n);
  for (int slot = n - 1; slot >= 0; --slot) {
    profile[slot] = domain[index % domain.size()];
    index /= domain.size();
  }
  return profile;
}

PairRule::PairRule(int m, int n_slots)
    : m_(m), n_slots_(n_slots), keys_per_pair_(pow3(n_slots)) {
  if (m < 2 || n_slots < 1) throw ArgumentError("pair rule needs m >= 2, n >= 1");
  table_.assign(all_pairs(m).size() * keys_per_pair_, PairOrder::kTie);
}

std::size_t PairRule::key_of(std::span<const PairOrder> per_slot) {
  std::size_t key = 0;
  for (PairOrder o : per_slot) key = key * 3 + static_cast<std::size_t>(o);
  return key;
}

PairOrder PairRule::get(std::size_t pair_index, std::size_t key) const {
  return table_.at(pair_index * keys_per_pair_ + key);
}

void PairRule::set(std::size_t pair_index, std::size_t key, PairOrder out) {
  table_.at(pair_index * keys_per_pair_ + key) = out;
}

std::optional<Preference> PairRule::evaluate(const Profile& profile) const {
  if (static_cast<int>(profile.size()) != n_slots_) {
    throw ArgumentError("profile length does not match pair rule");
  }
  const auto pairs = all_pairs(m_);
  std::vector<PairOrder> out(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    out[p] = get(p, pair_key(profile, pairs[p].first, pairs[p].second));
  }
  return preference_from_pair_orders(m_, out);
}

AggregationMap AggregationMap::tabulate(int n_slots, Domain input, Domain output,
                                        const Function& f) {
  if (input.alternative_count() != output.alternative_count()) {
    throw ArgumentError("input and output domains differ in alternative count");
  }
  AggregationMap map(n_slots, std::move(input), std::move(output));
  const std::size_t count = profile_space_size(map.input_, n_slots);
  map.outputs_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Profile out = f(profile_at(map.input_, n_slots, i));
    if (static_cast<int>(out.size()) != n_slots) {
      throw ArgumentError("map output has the wrong number of slots");
    }
    for (const auto& p : out) {
      if (!map.output_.contains(p)) {
        throw ArgumentError("map output " + format_pref(p) +
                            " is not in the output domain");
      }
    }
    map.outputs_.push_back(std::move(out));
  }
  return map;
}

AggregationMap AggregationMap::from_pair_rules(Domain input, Domain output,
                                               std::vector<PairRule> rules) {
  const int n = static_cast<int>(rules.size());
  for (const auto& r : rules) {
    if (r.slot_count() != n || r.alternative_count() != input.alternative_count()) {
      throw ArgumentError("pair rule shape does not match the map");
    }
  }
  auto f = [&rules](const Profile& in) {
    Profile out;
    for (const auto& r : rules) {
      auto p = r.evaluate(in);
      if (!p) {
        throw VerificationError("pair rule is not a weak order on profile " +
                                format_profile(in));
      }
      out.push_back(*p);
    }
    return out;
  };
  AggregationMap map = tabulate(n, std::move(input), std::move(output), f);
  map.rules_ = std::move(rules);
  return map;
}

Profile AggregationMap::input_profile(std::size_t index) const {
  return profile_at(input_, n_slots_, index);
}

const Profile& AggregationMap::apply(const Profile& input) const {
  if (static_cast<int>(input.size()) != n_slots_) {
    throw ArgumentError("profile length does not match the map");
  }
  std::size_t index = 0;
  for (const auto& p : input) {
    auto i = input_.index_of(p);
    if (!i) throw ArgumentError(format_pref(p) + " is not in the input domain");
    index = index * input_.size() + *i;
  }
  return outputs_[index];
}

AggregationMap AggregationMap::with_output_domain(Domain output) const {
  for (const auto& profile : outputs_) {
    for (const auto& p : profile) {
      if (!output.contains(p)) {
        throw ArgumentError(format_pref(p) + " is not in the new output domain");
      }
    }
  }
  AggregationMap copy = *this;
  copy.output_ = std::move(output);
  return copy;
}

CheckResult check_unanimity(const AggregationMap& f) {
  const int m = f.input_domain().alternative_count();
  for (std::size_t i = 0; i < f.profile_count(); ++i) {
    const Profile in = f.input_profile(i);
    const Profile& out = f.output(i);
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        if (a == b || !all_strictly_prefer(in, a, b)) continue;
        for (int j = 0; j < f.slot_count(); ++j) {
          if (!strictly_prefers(out[j], a, b)) {
            return {false, Counterexample{in, out, {}, {}, std::pair{a, b}, j}};
          }
        }
      }
    }
  }
  return {};
}

CheckResult check_iia(const AggregationMap& f) {
  const int m = f.input_domain().alternative_count();
  for (const auto& [a, b] : all_pairs(m)) {
    // input pair pattern -> (first profile index, output pair pattern)
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < f.profile_count(); ++i) {
      const Profile in = f.input_profile(i);
      const std::size_t key = pair_key(in, a, b);
      const std::size_t out_key = pair_key(f.output(i), a, b);
      auto [it, inserted] = seen.try_emplace(key, i, out_key);
      if (!inserted && it->second.second != out_key) {
        const std::size_t first = it->second.first;
        const Profile& lhs = f.output(first);
        const Profile& rhs = f.output(i);
        int slot = 0;
        while (pair_order(lhs[slot], a, b) == pair_order(rhs[slot], a, b)) ++slot;
        return {false, Counterexample{f.input_profile(first), lhs, in, rhs, std::pair{a, b},
                                      slot}};
      }
    }
  }
  return {};
}

CheckResult check_k_set(const AggregationMap& f, int k) {
  if (k < 1) throw ArgumentError("k-set agreement needs k >= 1");
  for (std::size_t i = 0; i < f.profile_count(); ++i) {
    if (distinct_count(f.output(i)) > static_cast<std::size_t>(k)) {
      return {false, Counterexample{f.input_profile(i), f.output(i), {}, {}, {}, {}}};
    }
  }
  return {};
}

CheckResult check_eps_agreement(const AggregationMap& f, const Rational& eps,
                                MetricKind kind) {
  if (!f.output_domain().all_strict()) {
    throw DomainError("eps-agreement needs a strict output domain");
  }
  for (std::size_t i = 0; i < f.profile_count(); ++i) {
    if (Rational(profile_diameter(f.output(i), kind)) > eps) {
      return {false, Counterexample{f.input_profile(i), f.output(i), {}, {}, {}, {}}};
    }
  }
  return {};
}

std::vector<std::vector<int>> find_decisive_sets(const AggregationMap& f) {
  const int n = f.slot_count();
  if (n > 20) throw CapacityError("decisive-set search supports at most 20 slots");
  const int m = f.input_domain().alternative_count();
  // Masks of slots agreeing on a strict pair that the output did not honour
  // in every slot. S is decisive iff it is contained in none of them.
  std::vector<bool> bad(std::size_t{1} << n, false);
  for (std::size_t i = 0; i < f.profile_count(); ++i) {
    const Profile in = f.input_profile(i);
    const Profile& out = f.output(i);
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        if (a == b) continue;
        unsigned mask = 0;
        for (int s = 0; s < n; ++s) {
          if (strictly_prefers(in[s], a, b)) mask |= 1u << s;
        }
        if (mask == 0) continue;
        if (!all_strictly_prefer(out, a, b)) bad[mask] = true;
      }
    }
  }
  std::vector<unsigned> bad_masks;
  for (unsigned mask = 1; mask < bad.size(); ++mask) {
    if (bad[mask]) bad_masks.push_back(mask);
  }
  std::vector<unsigned> decisive;
  for (unsigned s = 1; s < bad.size(); ++s) {
    bool ok = std::all_of(bad_masks.begin(), bad_masks.end(),
                          [s](unsigned mask) { return (s & ~mask) != 0; });
    if (ok) decisive.push_back(s);
  }
  std::vector<std::vector<int>> minimal;
  for (unsigned s : decisive) {
    bool has_smaller = std::any_of(decisive.begin(), decisive.end(), [s](unsigned t) {
      return t != s && (t & s) == t;
    });
    if (has_smaller) continue;
    std::vector<int> slots;
    for (int i = 0; i < n; ++i) {
      if (s & (1u << i)) slots.push_back(i);
    }
    minimal.push_back(std::move(slots));
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return minimal;
}

bool is_k_dictatorship(const AggregationMap& f, int k) {
  const auto sets = find_decisive_sets(f);
  return std::any_of(sets.begin(), sets.end(), [k](const std::vector<int>& s) {
    return static_cast<int>(s.size()) <= k;
  });
}

DictatorAssignment coordinate_dictators(const AggregationMap& f) {
  const int n = f.slot_count();
  const int m = f.input_domain().alternative_count();
  // dictates[j][i]: input slot i's strict pairs always reach output slot j.
  std::vector<std::vector<bool>> dictates(n, std::vector<bool>(n, true));
  for (std::size_t idx = 0; idx < f.profile_count(); ++idx) {
    const Profile in = f.input_profile(idx);
    const Profile& out = f.output(idx);
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        if (a == b) continue;
        for (int i = 0; i < n; ++i) {
          if (!strictly_prefers(in[i], a, b)) continue;
          for (int j = 0; j < n; ++j) {
            if (!strictly_prefers(out[j], a, b)) dictates[j][i] = false;
          }
        }
      }
    }
  }
  DictatorAssignment result;
  for (int j = 0; j < n; ++j) {
    auto it = std::find(dictates[j].begin(), dictates[j].end(), true);
    if (it == dictates[j].end()) {
      throw VerificationError("output slot " + std::to_string(j + 1) +
                              " has no dictating input slot");
    }
    result.delta.push_back(static_cast<int>(it - dictates[j].begin()));
  }
  return result;
}

ArrowEnumeration enumerate_arrow_maps(int n_slots, int m) {
  if (n_slots != 2 || m != 3) {
    throw CapacityError("Arrow enumeration supports only n = 2, m = 3");
  }
  const Domain strict = enumerate_strict(m);
  const Domain weak = enumerate_weak(m);
  const auto pairs = all_pairs(m);  // (0,1) (0,2) (1,2)
  constexpr int kPairs = 3;
  // Strict per-slot pattern index: 0 = (A,A), 1 = (A,B), 2 = (B,A), 3 = (B,B).
  constexpr std::array<std::size_t, 4> kStrictKeys = {0, 1, 3, 4};
  constexpr int kEntries = kPairs * 4;
  std::size_t candidates = 1;
  for (int e = 0; e < kEntries; ++e) candidates *= 3;

  std::array<bool, 27> weak_order_ok{};
  for (int code = 0; code < 27; ++code) {
    std::array<PairOrder, 3> orders = {static_cast<PairOrder>(code / 9),
                                       static_cast<PairOrder>(code / 3 % 3),
                                       static_cast<PairOrder>(code % 3)};
    weak_order_ok[code] = preference_from_pair_orders(m, orders).has_value();
  }

  const std::size_t profiles = profile_space_size(strict, n_slots);
  std::vector<std::array<int, kPairs>> pattern(profiles);
  for (std::size_t i = 0; i < profiles; ++i) {
    const Profile in = profile_at(strict, n_slots, i);
    for (int p = 0; p < kPairs; ++p) {
      const std::size_t key = pair_key(in, pairs[p].first, pairs[p].second);
      pattern[i][p] = static_cast<int>(
          std::find(kStrictKeys.begin(), kStrictKeys.end(), key) - kStrictKeys.begin());
    }
  }

  const int chunks = max_workers();
  std::vector<std::uint64_t> weak_valid(chunks, 0);
  std::vector<std::vector<std::size_t>> survivors(chunks);
  parallel_chunks(candidates, chunks, [&](std::size_t begin, std::size_t end, int c) {
    std::array<int, kEntries> table{};
    for (std::size_t cand = begin; cand < end; ++cand) {
      std::size_t code = cand;
      for (int e = kEntries - 1; e >= 0; --e) {
        table[e] = static_cast<int>(code % 3);
        code /= 3;
      }
      bool weak_ok = true;
      bool unanimous = true;
      for (std::size_t i = 0; i < profiles && weak_ok; ++i) {
        int triple = 0;
        for (int p = 0; p < kPairs; ++p) {
          const int q = pattern[i][p];
          const int out = table[p * 4 + q];
          triple = triple * 3 + out;
          if (q == 0 && out != static_cast<int>(PairOrder::kAbove)) unanimous = false;
          if (q == 3 && out != static_cast<int>(PairOrder::kBelow)) unanimous = false;
        }
        weak_ok = weak_order_ok[triple];
      }
      if (!weak_ok) continue;
      ++weak_valid[c];
      if (unanimous) survivors[c].push_back(cand);
    }
  });

  ArrowEnumeration result;
  result.candidates = candidates;
  for (int c = 0; c < chunks; ++c) {
    result.weak_order_valid += weak_valid[c];
    for (std::size_t cand : survivors[c]) {
      PairRule rule(m, n_slots);
      std::size_t code = cand;
      for (int e = kEntries - 1; e >= 0; --e) {
        rule.set(e / 4, kStrictKeys[e % 4], static_cast<PairOrder>(code % 3));
        code /= 3;
      }
      result.rules.push_back(rule);
    }
  }
  result.valid = result.rules.size();
  for (const auto& rule : result.rules) {
    AggregationMap map = AggregationMap::from_pair_rules(
        strict, weak, std::vector<PairRule>(n_slots, rule));
    auto sets = find_decisive_sets(map);
    if (!sets.empty() && sets.front().size() == 1) ++result.dictatorial;
    result.decisive_sets.push_back(std::move(sets));
    result.maps.push_back(std::move(map));
  }
  return result;
}

PerfectSyncReport verify_perfect_sync_props() {
  constexpr int kSlots = 2;
  constexpr int kAlternatives = 3;
  const ArrowEnumeration arrow = enumerate_arrow_maps(kSlots, kAlternatives);
  const Domain strict = enumerate_strict(kAlternatives);
  const Domain weak = enumerate_weak(kAlternatives);

  PerfectSyncReport report;
  // Unanimity and IIA constrain each output coordinate separately, so the
  // admissible maps are the products of admissible single-output rules.
  for (const auto& first : arrow.rules) {
    for (const auto& second : arrow.rules) {
      report.maps.push_back(
          AggregationMap::from_pair_rules(strict, weak, {first, second}));
    }
  }
  report.kt_eps_tested = {Rational(0), Rational(1), Rational(2), Rational(5, 2),
                          Rational(2999, 1000)};
  report.sf_eps_tested = {Rational(0), Rational(1), Rational(2), Rational(3),
                          Rational(7, 2), Rational(3999, 1000)};

  auto survives_all = [](const AggregationMap& narrowed,
                         const std::vector<Rational>& eps_list, MetricKind kind) {
    return std::all_of(eps_list.begin(), eps_list.end(), [&](const Rational& eps) {
      return check_eps_agreement(narrowed, eps, kind).holds;
    });
  };

  bool ok = report.maps.size() == 4;
  for (std::size_t i = 0; i < report.maps.size(); ++i) {
    const AggregationMap& map = report.maps[i];
    report.assignments.push_back(coordinate_dictators(map));
    const bool admissible = check_unanimity(map).holds && check_iia(map).holds;
    report.unanimity_and_iia.push_back(admissible);
    ok = ok && admissible;
    const bool dictatorial = is_k_dictatorship(map, 1);
    if (check_k_set(map, 1).holds) {
      report.consensus.push_back(i);
      if (dictatorial) report.consensus_dictatorial.push_back(i);
    }
    // Outputs of these maps are all strict, so the table can be viewed as a
    // map into L(3)^2 where both rank metrics are defined.
    const AggregationMap narrowed = map.with_output_domain(strict);
    if (survives_all(narrowed, report.kt_eps_tested, MetricKind::kKendallTau)) {
      report.kt_agreeing.push_back(i);
      ok = ok && dictatorial;
    }
    if (survives_all(narrowed, report.sf_eps_tested, MetricKind::kSpearmanFootrule)) {
      report.sf_agreeing.push_back(i);
      ok = ok && dictatorial;
    }
  }
  ok = ok && report.consensus.size() == 2 &&
       report.consensus_dictatorial == report.consensus &&
       report.kt_agreeing == report.consensus && report.sf_agreeing == report.consensus;
  report.passed = ok;
  return report;
}

}  // namespace arrovian
