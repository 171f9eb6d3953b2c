#pragma once

// E-sequence -> C-sequence conversion through unique time points.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "huipm/error.hpp"
#include "huipm/model.hpp"

namespace huipm {

using TimePointList = std::vector<Time>;

inline TimePointList unique_time_points(const ESequence& s) {
  if (s.empty()) throw DataError("empty E-sequence");
  TimePointList points;
  points.reserve(2 * s.size());
  for (const auto& e : s.intervals()) {
    points.push_back(e.begin);
    points.push_back(e.finish);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// Labels whose intervals cover the whole window [from, to].
inline Coincidence phi(const ESequence& s, Time from, Time to) {
  if (from >= to) throw ArgumentError("invalid window");
  std::vector<Label> labels;
  for (const auto& e : s.intervals()) {
    if (e.begin <= from && to <= e.finish) labels.push_back(e.label);
  }
  return Coincidence(std::move(labels));
}

inline CSequence to_csequence(const ESequence& s) {
  const auto points = unique_time_points(s);
  CSequence out;
  out.id = s.id();
  out.eventsets.reserve(points.size() - 1);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    out.eventsets.emplace_back(phi(s, points[k], points[k + 1]), points[k + 1] - points[k]);
  }
  return out;
}

// Every label in `d` must have a utility entry unless `default_utility` is
// given, in which case missing labels receive it.
inline CSequenceDataset transform_dataset(const ESequenceDataset& d, const UtilityTable& u,
                                          std::optional<UtilityValue> default_utility = std::nullopt) {
  CSequenceDataset out;
  out.utilities = u;
  std::set<SequenceId> seen;
  out.csequences.reserve(d.sequences.size());
  for (const auto& s : d.sequences) {
    if (!seen.insert(s.id()).second) throw DataError("duplicate sequence id " + std::to_string(s.id()));
    for (const auto& e : s.intervals()) {
      if (out.utilities.contains(e.label)) continue;
      if (!default_utility) throw DataError("no external utility for label " + e.label);
      out.utilities.set(e.label, *default_utility);
    }
    out.csequences.push_back(to_csequence(s));
  }
  return out;
}

}  // namespace huipm
