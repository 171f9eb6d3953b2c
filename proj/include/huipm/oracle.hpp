#pragma once

// Brute-force reference miner and seeded instance generator.
//
// Deliberately independent of utility.hpp and miner.hpp: utilities are
// recomputed from the raw table by exhaustive enumeration of index
// assignments. Only the domain types and the transform are shared.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "huipm/error.hpp"
#include "huipm/model.hpp"

namespace huipm::oracle {

inline constexpr std::uint64_t kDefaultBudget = 200'000;

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t num_sequences = 5;
  std::size_t max_intervals_per_seq = 6;
  std::size_t alphabet_size = 4;
  Time max_time = 20;
  Duration max_duration = 8;
  std::uint64_t max_external_utility = 5;

  void validate() const {
    if (num_sequences < 1 || max_intervals_per_seq < 1 || alphabet_size < 1 || max_time < 1 || max_duration < 1 ||
        max_external_utility < 1) {
      throw ArgumentError("generator parameters must all be >= 1");
    }
    if (alphabet_size > 26) throw ArgumentError("alphabet size must be <= 26");
  }
};

// Non-empty subsets of `alphabet` of size <= Z in (size, lexicographic) order.
inline std::vector<Coincidence> enumerate_coincidences(const std::vector<Label>& alphabet, std::size_t Z) {
  std::vector<Label> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Coincidence> out;
  std::vector<Label> cur;
  for (std::size_t z = 1; z <= std::min(Z, sorted.size()); ++z) {
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (cur.size() == z) {
        out.emplace_back(cur);
        return;
      }
      for (std::size_t i = from; i < sorted.size(); ++i) {
        cur.push_back(sorted[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

inline std::uint64_t count_lsequences(std::size_t num_coincidences, std::size_t K) {
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (std::size_t k = 1; k <= K; ++k) {
    if (num_coincidences != 0 && level > UINT64_MAX / num_coincidences) return UINT64_MAX;
    level *= num_coincidences;
    if (total > UINT64_MAX - level) return UINT64_MAX;
    total += level;
  }
  return total;
}

// Calls `visit` on every L-sequence of length <= K over coincidences of size
// <= Z, shortest first, each length in canonical order.
inline void enumerate_lsequences(const std::vector<Label>& alphabet, std::size_t K, std::size_t Z,
                                 const std::function<void(const LSequence&)>& visit) {
  if (K < 1 || Z < 1) throw ArgumentError("K and Z must be >= 1");
  const auto coins = enumerate_coincidences(alphabet, Z);
  if (coins.empty()) return;
  std::vector<std::size_t> idx;
  for (std::size_t len = 1; len <= K; ++len) {
    idx.assign(len, 0);
    while (true) {
      std::vector<Coincidence> cs;
      cs.reserve(len);
      for (auto i : idx) cs.push_back(coins[i]);
      visit(LSequence(std::move(cs)));
      std::size_t pos = len;
      while (pos > 0 && ++idx[pos - 1] == coins.size()) {
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

inline std::vector<LSequence> enumerate_lsequences(const std::vector<Label>& alphabet, std::size_t K, std::size_t Z) {
  std::vector<LSequence> out;
  enumerate_lsequences(alphabet, K, Z, [&](const LSequence& l) { out.push_back(l); });
  return out;
}

// Utility of every C' <= c with C' ~ l, by trying all strictly increasing
// index tuples.
inline std::vector<UtilityValue> all_match_utilities(const LSequence& l, const CSequence& c, const UtilityTable& t) {
  std::vector<UtilityValue> out;
  const std::size_t g = l.length();
  const std::size_t h = c.size();
  if (g == 0 || g > h) return out;
  std::vector<std::size_t> j(g);
  for (std::size_t k = 0; k < g; ++k) j[k] = k;
  while (true) {
    bool ok = true;
    UtilityValue u = 0;
    for (std::size_t k = 0; k < g && ok; ++k) {
      const auto& sigma = c.eventsets[j[k]];
      for (const auto& label : l[k]) {
        if (!sigma.coincidence.contains(label)) {
          ok = false;
          break;
        }
        u += t.at(label) * static_cast<UtilityValue>(sigma.duration);
      }
    }
    if (ok) out.push_back(u);
    // Next combination of g indices from h.
    std::size_t pos = g;
    while (pos > 0 && j[pos - 1] == h - g + pos - 1) --pos;
    if (pos == 0) break;
    ++j[pos - 1];
    for (std::size_t k = pos; k < g; ++k) j[k] = j[k - 1] + 1;
  }
  return out;
}

inline UtilityValue max_utility(const LSequence& l, const CSequenceDataset& d) {
  UtilityValue total = 0;
  for (const auto& c : d.csequences) {
    const auto all = all_match_utilities(l, c, d.utilities);
    if (!all.empty()) total += *std::max_element(all.begin(), all.end());
  }
  return total;
}

// Best u_s over every subset of at most k eventset positions.
inline UtilityValue max_k_utility(const CSequence& c, std::size_t k, const UtilityTable& t) {
  if (c.size() > 20) throw ArgumentError("C-sequence too long for exhaustive search");
  UtilityValue best = 0;
  for (std::uint32_t mask = 0; mask < (1u << c.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
    UtilityValue u = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!(mask & (1u << i))) continue;
      for (const auto& label : c.eventsets[i].coincidence) u += t.at(label) * static_cast<UtilityValue>(c.eventsets[i].duration);
    }
    best = std::max(best, u);
  }
  return best;
}

inline UtilityValue dataset_utility(const CSequenceDataset& d) {
  UtilityValue total = 0;
  for (const auto& c : d.csequences)
    for (const auto& e : c.eventsets)
      for (const auto& label : e.coincidence) total += d.utilities.at(label) * static_cast<UtilityValue>(e.duration);
  return total;
}

struct OraclePattern {
  LSequence lsequence;
  UtilityValue umax = 0.0;

  friend bool operator==(const OraclePattern&, const OraclePattern&) = default;
};

// Every L with |L| <= K, size <= Z over the dataset alphabet and
// u_max(L) >= xi_abs, in canonical (length, coincidence-wise) order.
inline std::vector<OraclePattern> brute_force_mine(const CSequenceDataset& d, UtilityValue xi_abs, std::size_t K,
                                                   std::size_t Z, std::uint64_t budget = kDefaultBudget) {
  const auto alphabet = d.alphabet();
  const auto coins = enumerate_coincidences(alphabet, Z);
  if (count_lsequences(coins.size(), K) > budget) throw ArgumentError("instance too large for oracle");
  std::vector<OraclePattern> out;
  enumerate_lsequences(alphabet, K, Z, [&](const LSequence& l) {
    const auto u = oracle::max_utility(l, d);
    if (u >= xi_abs) out.push_back(OraclePattern{l, u});
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lsequence < b.lsequence; });
  return out;
}

// Deterministic in the seed. Labels are "A".."Z" truncated to
// alphabet_size; every one of them receives a utility in
// [0, max_external_utility].
inline std::pair<ESequenceDataset, UtilityTable> random_dataset(const GeneratorParams& p) {
  p.validate();
  std::mt19937_64 rng(p.seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  ESequenceDataset data;
  for (std::size_t s = 0; s < p.num_sequences; ++s) {
    const std::size_t n = uniform(1, p.max_intervals_per_seq);
    std::set<std::tuple<Label, Time, Time>> seen;
    std::vector<EventInterval> intervals;
    for (std::size_t i = 0; i < n; ++i) {
      Label label(1, static_cast<char>('A' + uniform(0, p.alphabet_size - 1)));
      const Time b = uniform(0, p.max_time - 1);
      const Time f = b + uniform(1, p.max_duration);
      if (!seen.emplace(label, b, f).second) continue;
      intervals.emplace_back(std::move(label), b, f);
    }
    data.sequences.emplace_back(s + 1, std::move(intervals));
  }
  UtilityTable table;
  for (std::size_t a = 0; a < p.alphabet_size; ++a) {
    table.set(Label(1, static_cast<char>('A' + a)), static_cast<UtilityValue>(uniform(0, p.max_external_utility)));
  }
  return {std::move(data), std::move(table)};
}

}  // namespace huipm::oracle
