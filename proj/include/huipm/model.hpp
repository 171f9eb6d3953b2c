#pragma once

// Domain types for interval-based event sequences and their coincidence
// representation, plus the containment / match relations between them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "huipm/error.hpp"

namespace huipm {

using Label = std::string;
using Time = std::uint64_t;
using Duration = std::uint64_t;
using SequenceId = std::uint64_t;
using UtilityValue = double;

// A labeled interval [begin, finish) with begin < finish.
struct EventInterval {
  Label label;
  Time begin = 0;
  Time finish = 0;

  EventInterval() = default;
  EventInterval(Label l, Time b, Time f) : label(std::move(l)), begin(b), finish(f) {
    if (label.empty()) throw DataError("event label must be non-empty");
    if (begin >= finish) {
      throw DataError("interval " + label + " has begin " + std::to_string(begin) +
                      " >= finish " + std::to_string(finish));
    }
  }

  friend bool operator==(const EventInterval&, const EventInterval&) = default;
};

// Canonical E-sequence ordering: begin ascending, label on ties. Finish is a
// final tiebreak so the order is total.
inline bool interval_order(const EventInterval& a, const EventInterval& b) {
  return std::tie(a.begin, a.label, a.finish) < std::tie(b.begin, b.label, b.finish);
}

class ESequence {
 public:
  ESequence() = default;
  ESequence(SequenceId id, std::vector<EventInterval> intervals)
      : id_(id), intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end(), interval_order);
  }

  SequenceId id() const { return id_; }
  const std::vector<EventInterval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  friend bool operator==(const ESequence&, const ESequence&) = default;

 private:
  SequenceId id_ = 0;
  std::vector<EventInterval> intervals_;
};

struct ESequenceDataset {
  std::vector<ESequence> sequences;

  std::size_t num_intervals() const {
    std::size_t n = 0;
    for (const auto& s : sequences) n += s.size();
    return n;
  }

  friend bool operator==(const ESequenceDataset&, const ESequenceDataset&) = default;
};

// A set of labels kept sorted and deduplicated. May be empty.
class Coincidence {
 public:
  Coincidence() = default;
  Coincidence(std::initializer_list<Label> labels) : labels_(labels) { canonicalize(); }
  explicit Coincidence(std::vector<Label> labels) : labels_(std::move(labels)) { canonicalize(); }

  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool contains(const Label& l) const { return std::binary_search(labels_.begin(), labels_.end(), l); }
  bool is_subset_of(const Coincidence& other) const {
    return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
  }

  Coincidence with(const Label& l) const {
    auto v = labels_;
    v.push_back(l);
    return Coincidence(std::move(v));
  }

  friend bool operator==(const Coincidence&, const Coincidence&) = default;

  // Enumeration order: smaller sets first, then lexicographic.
  friend std::strong_ordering operator<=>(const Coincidence& a, const Coincidence& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  void canonicalize() {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  }

  std::vector<Label> labels_;
};

// (coincidence, duration) with duration >= 1.
struct CEventset {
  Coincidence coincidence;
  Duration duration = 1;

  CEventset() = default;
  CEventset(Coincidence c, Duration d) : coincidence(std::move(c)), duration(d) {
    if (duration < 1) throw DataError("C-eventset duration must be >= 1");
  }

  friend bool operator==(const CEventset&, const CEventset&) = default;
};

struct CSequence {
  SequenceId id = 0;
  std::vector<CEventset> eventsets;

  std::size_t size() const { return eventsets.size(); }
  friend bool operator==(const CSequence&, const CSequence&) = default;
};

// Pattern language: a non-empty-coincidence list. Length is the number of
// coincidences, size the largest coincidence cardinality.
class LSequence {
 public:
  LSequence() = default;
  LSequence(std::initializer_list<Coincidence> cs) : coincidences_(cs) { validate(); }
  explicit LSequence(std::vector<Coincidence> cs) : coincidences_(std::move(cs)) { validate(); }

  const std::vector<Coincidence>& coincidences() const { return coincidences_; }
  const Coincidence& operator[](std::size_t i) const { return coincidences_[i]; }
  std::size_t length() const { return coincidences_.size(); }
  std::size_t size() const {
    std::size_t z = 0;
    for (const auto& c : coincidences_) z = std::max(z, c.size());
    return z;
  }
  bool empty() const { return coincidences_.empty(); }

  LSequence extended(const Coincidence& c) const {
    auto v = coincidences_;
    v.push_back(c);
    return LSequence(std::move(v));
  }

  friend bool operator==(const LSequence&, const LSequence&) = default;

  // Canonical pattern order: length first, then coincidence-wise.
  friend std::strong_ordering operator<=>(const LSequence& a, const LSequence& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.coincidences_ <=> b.coincidences_;
  }

 private:
  void validate() const {
    for (const auto& c : coincidences_) {
      if (c.empty()) throw ArgumentError("L-sequence coincidences must be non-empty");
    }
  }

  std::vector<Coincidence> coincidences_;
};

// External utility p(l) >= 0 per label. The empty coincidence carries no
// labels, so it contributes 0 without an entry.
class UtilityTable {
 public:
  UtilityTable() = default;
  UtilityTable(std::initializer_list<std::pair<const Label, UtilityValue>> entries) {
    for (const auto& [l, v] : entries) set(l, v);
  }

  void set(const Label& label, UtilityValue value) {
    if (!(value >= 0.0)) throw DataError("external utility of " + label + " must be >= 0");
    entries_[label] = value;
  }

  bool contains(const Label& label) const { return entries_.count(label) != 0; }

  UtilityValue at(const Label& label) const {
    auto it = entries_.find(label);
    if (it == entries_.end()) throw DataError("no external utility for label " + label);
    return it->second;
  }

  const std::map<Label, UtilityValue>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const UtilityTable&, const UtilityTable&) = default;

 private:
  std::map<Label, UtilityValue> entries_;
};

struct CSequenceDataset {
  std::vector<CSequence> csequences;
  UtilityTable utilities;

  // Distinct labels over all coincidences, sorted.
  std::vector<Label> alphabet() const {
    std::vector<Label> out;
    for (const auto& c : csequences)
      for (const auto& e : c.eventsets) out.insert(out.end(), e.coincidence.begin(), e.coincidence.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// ---------------------------------------------------------------------------
// Relations

inline bool eventset_contains(const CEventset& a, const CEventset& b) {
  return a.duration == b.duration && a.coincidence.is_subset_of(b.coincidence);
}

// Strictly increasing index assignment. Greedy leftmost matching is exact for
// subsequence tests.
inline bool is_csubsequence(const CSequence& c, const CSequence& c_prime) {
  std::size_t j = 0;
  for (const auto& sigma : c.eventsets) {
    while (j < c_prime.eventsets.size() && !eventset_contains(sigma, c_prime.eventsets[j])) ++j;
    if (j == c_prime.eventsets.size()) return false;
    ++j;
  }
  return true;
}

inline bool matches(const CSequence& c, const LSequence& l) {
  if (c.size() != l.length()) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!(c.eventsets[k].coincidence == l[k])) return false;
  }
  return true;
}

inline bool is_lsubsequence(const LSequence& l, const LSequence& l_prime) {
  std::size_t j = 0;
  for (const auto& c : l.coincidences()) {
    while (j < l_prime.length() && !c.is_subset_of(l_prime[j])) ++j;
    if (j == l_prime.length()) return false;
    ++j;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Formatting

inline std::ostream& operator<<(std::ostream& os, const Coincidence& c) {
  if (c.empty()) return os << "{}";
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c.labels()[i];
  return os << '}';
}

inline std::ostream& operator<<(std::ostream& os, const CEventset& e) {
  return os << '(' << e.coincidence << ',' << e.duration << ')';
}

inline std::ostream& operator<<(std::ostream& os, const CSequence& c) {
  os << '<';
  for (const auto& e : c.eventsets) os << e;
  return os << '>';
}

inline std::ostream& operator<<(std::ostream& os, const LSequence& l) {
  os << '<';
  for (const auto& c : l.coincidences()) os << c;
  return os << '>';
}

}  // namespace huipm
