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

#include "arrovian/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "arrovian/errors.hpp"

namespace arrovian {

std::string_view to_string(Synchrony s) {
  return s == Synchrony::kSync ? "sync" : "async";
}

Synchrony parse_synchrony(std::string_view text) {
  if (text == "sync") return Synchrony::kSync;
  if (text == "async") return Synchrony::kAsync;
  throw ArgumentError("unknown synchrony '" + std::string(text) + "'");
}

SystemParams::SystemParams(int n_in, int t_in) : n(n_in), t(t_in) {
  if (t < 1 || t >= n) {
    throw ArgumentError("system parameters need 1 <= t < n (got n=" +
                        std::to_string(n) + ", t=" + std::to_string(t) + ")");
  }
}

int sync_process_number(const SystemParams& p, Synchrony s) {
  return s == Synchrony::kSync ? p.n : p.n - p.t;
}

int min_cycle_length(const SystemParams& p, Synchrony s) {
  const int nbar = sync_process_number(p, s);
  return (nbar + p.t - 1) / p.t;
}

BlockPartition::BlockPartition(int m, std::vector<std::vector<Alternative>> blocks)
    : m_(m), blocks_(std::move(blocks)) {
  if (m < 1) throw ArgumentError("alternative count must be positive");
  if (blocks_.empty()) throw ArgumentError("a block partition needs a block");
  std::vector<bool> seen(m, false);
  for (const auto& block : blocks_) {
    if (block.empty()) throw ArgumentError("empty block");
    for (Alternative a : block) {
      if (a < 0 || a >= m) throw ArgumentError("block alternative out of range");
      if (seen[a]) throw ArgumentError("alternative in more than one block");
      seen[a] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw ArgumentError("blocks do not cover every alternative");
  }
}

BlockPartition BlockPartition::singletons(int m) {
  std::vector<std::vector<Alternative>> blocks;
  for (Alternative a = 0; a < m; ++a) blocks.push_back({a});
  return BlockPartition(m, std::move(blocks));
}

int BlockPartition::min_block_size() const {
  std::size_t best = blocks_.front().size();
  for (const auto& b : blocks_) best = std::min(best, b.size());
  return static_cast<int>(best);
}

BlockPartition parse_blocks(std::string_view text, int m) {
  const AlternativeSet names(m);
  std::vector<std::vector<Alternative>> blocks(1);
  std::size_t i = 0;
  bool expect_name = true;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '|' || c == ',') {
      if (expect_name) throw ParseError("expected alternative name", i);
      if (c == '|') blocks.emplace_back();
      expect_name = true;
      ++i;
    } else {
      if (!expect_name) throw ParseError("expected ',' or '|'", i);
      const std::size_t start = i;
      while (i < text.size() && text[i] != '|' && text[i] != ',' && text[i] != ' ') ++i;
      const std::string_view token = text.substr(start, i - start);
      auto a = names.find(token);
      if (!a) throw ParseError("unknown alternative '" + std::string(token) + "'", start);
      blocks.back().push_back(*a);
      expect_name = false;
    }
  }
  if (expect_name) throw ParseError("expected alternative name", text.size());
  return BlockPartition(m, std::move(blocks));
}

std::string format_blocks(const BlockPartition& bp) {
  std::string out;
  for (std::size_t b = 0; b < bp.blocks().size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t i = 0; i < bp.blocks()[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(bp.blocks()[b][i]);
    }
  }
  return out;
}

std::vector<Preference> cyclic_preference_list(const BlockPartition& bp) {
  const int k = bp.block_count();
  std::vector<Preference> list;
  list.reserve(k);
  for (int j = 0; j < k; ++j) {
    std::vector<Alternative> ranking;
    for (int step = 0; step < k; ++step) {
      const auto& block = bp.blocks()[(j + step) % k];
      ranking.insert(ranking.end(), block.begin(), block.end());
    }
    list.push_back(Preference::from_ranking(ranking));
  }
  return list;
}

std::vector<std::vector<int>> equitable_partition(int nbar, int k) {
  if (k < 1) throw ArgumentError("equitable partition needs k >= 1");
  if (nbar < 0) throw ArgumentError("negative slot count");
  std::vector<std::vector<int>> sets(k);
  for (int slot = 0; slot < nbar; ++slot) sets[slot % k].push_back(slot);
  return sets;
}

Profile cyclic_profile(const BlockPartition& bp, int nbar) {
  std::vector<int> identity(bp.block_count());
  std::iota(identity.begin(), identity.end(), 0);
  return cyclic_profile(bp, nbar, identity);
}

Profile cyclic_profile(const BlockPartition& bp, int nbar,
                       std::span<const int> list_order) {
  const int k = bp.block_count();
  std::vector<int> sorted(list_order.begin(), list_order.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) {
    throw ArgumentError("list order must be a permutation of the k list entries");
  }
  const auto list = cyclic_preference_list(bp);
  const auto sets = equitable_partition(nbar, k);
  Profile profile(nbar);
  for (int i = 0; i < k; ++i) {
    for (int slot : sets[i]) profile[slot] = list[list_order[i]];
  }
  return profile;
}

std::optional<BlockPartition> match_cyclic_profile(const Profile& profile, int k) {
  const int m = profile_alternative_count(profile);
  if (m > kMaxStrictEnumeration) {
    throw CapacityError("cyclic recognition supports m <= " +
                        std::to_string(kMaxStrictEnumeration));
  }
  if (k < 1 || k > m) return std::nullopt;
  if (!std::all_of(profile.begin(), profile.end(),
                   [](const Preference& p) { return p.is_strict(); })) {
    return std::nullopt;
  }
  const int nbar = static_cast<int>(profile.size());
  std::map<Preference, int> counts;
  for (const auto& p : profile) ++counts[p];
  const int lo = nbar / k;
  const int hi = (nbar + k - 1) / k;
  const int distinct = static_cast<int>(counts.size());
  if (distinct > k) return std::nullopt;
  if (distinct < k && lo != 0) return std::nullopt;
  for (const auto& [pref, count] : counts) {
    if (count != lo && count != hi) return std::nullopt;
  }

  // Every entry is a rotation of the same block sequence, so the first entry
  // fixes the blocks up to where the k-1 cuts fall in its ranking.
  const auto ranking = profile.front().ranking();
  const unsigned cut_positions = static_cast<unsigned>(m - 1);
  for (unsigned mask = 0; mask < (1u << cut_positions); ++mask) {
    if (std::popcount(mask) != k - 1) continue;
    std::vector<std::vector<Alternative>> blocks(1);
    for (int pos = 0; pos < m; ++pos) {
      blocks.back().push_back(ranking[pos]);
      if (pos < m - 1 && (mask & (1u << pos))) blocks.emplace_back();
    }
    BlockPartition bp(m, std::move(blocks));
    const auto list = cyclic_preference_list(bp);
    const bool covers = std::all_of(counts.begin(), counts.end(), [&](const auto& kv) {
      return std::find(list.begin(), list.end(), kv.first) != list.end();
    });
    if (covers) return bp;
  }
  return std::nullopt;
}

std::optional<int> in_cyclic_family(const Profile& profile, const SystemParams& p,
                                    Synchrony s) {
  const int nbar = sync_process_number(p, s);
  if (static_cast<int>(profile.size()) != nbar) {
    throw ArgumentError("profile length " + std::to_string(profile.size()) +
                        " differs from the synchronous process number " +
                        std::to_string(nbar));
  }
  const int m = profile_alternative_count(profile);
  for (int k = std::max(1, min_cycle_length(p, s)); k <= m; ++k) {
    if (match_cyclic_profile(profile, k)) return k;
  }
  return std::nullopt;
}

}  // namespace arrovian
