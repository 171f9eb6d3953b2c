#pragma once

// Utility measures over C-sequences and the two upper bounds used for
// pruning: the L-sequence-weighted utilization LWU_k and the projected
// utilization P_k = u_max(L) + LWU_{k-|L|}(L).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "huipm/error.hpp"
#include "huipm/model.hpp"

namespace huipm {

enum class UpperBoundKind { None, LWU, Projected };

inline std::string_view to_string(UpperBoundKind k) {
  switch (k) {
    case UpperBoundKind::None: return "none";
    case UpperBoundKind::LWU: return "ldc";
    case UpperBoundKind::Projected: return "pdc";
  }
  return "?";
}

inline UtilityValue event_utility(const Label& l, Duration lambda, const UtilityTable& t) {
  return t.at(l) * static_cast<UtilityValue>(lambda);
}

// Utility of coincidence `c` held for `lambda` time units.
inline UtilityValue coincidence_utility(const Coincidence& c, Duration lambda, const UtilityTable& t) {
  UtilityValue sum = 0;
  for (const auto& l : c) sum += event_utility(l, lambda, t);
  return sum;
}

inline UtilityValue eventset_utility(const CEventset& sigma, const UtilityTable& t) {
  return coincidence_utility(sigma.coincidence, sigma.duration, t);
}

inline UtilityValue csequence_utility(const CSequence& c, const UtilityTable& t) {
  UtilityValue sum = 0;
  for (const auto& e : c.eventsets) sum += eventset_utility(e, t);
  return sum;
}

inline UtilityValue dataset_utility(const CSequenceDataset& d) {
  UtilityValue sum = 0;
  for (const auto& c : d.csequences) sum += csequence_utility(c, d.utilities);
  return sum;
}

// Eventset utilities of `c` sorted descending and prefix-summed:
// result[k] is the utility of the best k eventsets, k = 0..|c|.
inline std::vector<UtilityValue> top_k_prefix_sums(const CSequence& c, const UtilityTable& t) {
  std::vector<UtilityValue> u;
  u.reserve(c.size());
  for (const auto& e : c.eventsets) u.push_back(eventset_utility(e, t));
  std::sort(u.begin(), u.end(), std::greater<>());
  std::vector<UtilityValue> prefix(u.size() + 1, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) prefix[i + 1] = prefix[i] + u[i];
  return prefix;
}

// Best utility of at most k distinct eventsets of c. External utilities are
// nonnegative, so the optimum takes whole eventsets, the k largest.
inline UtilityValue max_k_utility(const CSequence& c, std::size_t k, const UtilityTable& t) {
  if (k < 1) throw ArgumentError("max_k_utility requires k >= 1");
  const auto prefix = top_k_prefix_sums(c, t);
  return prefix[std::min(k, c.size())];
}

// Exhaustive multiset of u_s(C') over every C' that is a C-subsequence of c
// and matches l. Exponential; meant for tests and small inputs.
inline std::vector<UtilityValue> utility_set(const LSequence& l, const CSequence& c, const UtilityTable& t) {
  std::vector<UtilityValue> out;
  if (l.empty()) return out;
  auto rec = [&](auto&& self, std::size_t k, std::size_t from, UtilityValue acc) -> void {
    if (k == l.length()) {
      out.push_back(acc);
      return;
    }
    for (std::size_t j = from; j < c.size(); ++j) {
      if (!l[k].is_subset_of(c.eventsets[j].coincidence)) continue;
      self(self, k + 1, j + 1, acc + coincidence_utility(l[k], c.eventsets[j].duration, t));
    }
  };
  rec(rec, 0, 0, 0.0);
  return out;
}

namespace detail {

inline constexpr UtilityValue kNoMatch = -std::numeric_limits<UtilityValue>::infinity();

// Best match utility of l in c, or kNoMatch when c does not contain l.
// best[k] holds the best utility of matching the first k coincidences
// within the positions scanned so far.
inline UtilityValue best_match(const LSequence& l, const CSequence& c, const UtilityTable& t) {
  const std::size_t g = l.length();
  if (g == 0) return 0.0;
  std::vector<UtilityValue> best(g + 1, kNoMatch);
  best[0] = 0.0;
  std::vector<UtilityValue> pattern_p(g);
  for (std::size_t k = 0; k < g; ++k) pattern_p[k] = coincidence_utility(l[k], 1, t);
  for (const auto& e : c.eventsets) {
    // Descending k so each position is used at most once per pass.
    for (std::size_t k = g; k >= 1; --k) {
      if (best[k - 1] == kNoMatch || !l[k - 1].is_subset_of(e.coincidence)) continue;
      best[k] = std::max(best[k], best[k - 1] + pattern_p[k - 1] * static_cast<UtilityValue>(e.duration));
    }
  }
  return best[g];
}

}  // namespace detail

// max(utility_set(l, c)), with 0 for an empty set.
inline UtilityValue max_match_utility(const LSequence& l, const CSequence& c, const UtilityTable& t) {
  const auto v = detail::best_match(l, c, t);
  return v == detail::kNoMatch ? 0.0 : v;
}

inline bool contains_match(const LSequence& l, const CSequence& c) {
  std::size_t j = 0;
  for (const auto& coin : l.coincidences()) {
    while (j < c.size() && !coin.is_subset_of(c.eventsets[j].coincidence)) ++j;
    if (j == c.size()) return false;
    ++j;
  }
  return true;
}

inline UtilityValue max_utility(const LSequence& l, const CSequenceDataset& d) {
  UtilityValue sum = 0;
  for (const auto& c : d.csequences) sum += max_match_utility(l, c, d.utilities);
  return sum;
}

// LWU_k: top-k eventset utility summed over sequences containing l.
// LWU_0 is 0.
inline UtilityValue lwu(const LSequence& l, std::size_t k, const CSequenceDataset& d) {
  if (k == 0) return 0.0;
  UtilityValue sum = 0;
  for (const auto& c : d.csequences) {
    if (contains_match(l, c)) sum += max_k_utility(c, k, d.utilities);
  }
  return sum;
}

inline UtilityValue projected_utilization(const LSequence& l, std::size_t k, const CSequenceDataset& d) {
  if (l.length() > k) {
    throw ArgumentError("projected utilization needs |L| <= k (|L| = " + std::to_string(l.length()) +
                        ", k = " + std::to_string(k) + ")");
  }
  return max_utility(l, d) + lwu(l, k - l.length(), d);
}

inline UtilityValue upper_bound(const LSequence& l, UpperBoundKind kind, std::size_t k, const CSequenceDataset& d) {
  switch (kind) {
    case UpperBoundKind::LWU: return lwu(l, k, d);
    case UpperBoundKind::Projected: return projected_utilization(l, k, d);
    case UpperBoundKind::None: break;
  }
  return std::numeric_limits<UtilityValue>::infinity();
}

// Inclusive: a bound equal to the threshold is still promising.
inline bool is_promising(const LSequence& l, UpperBoundKind kind, std::size_t k, UtilityValue xi_abs,
                         const CSequenceDataset& d) {
  if (kind == UpperBoundKind::None) return true;
  return upper_bound(l, kind, k, d) >= xi_abs;
}

}  // namespace huipm
