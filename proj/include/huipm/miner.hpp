#pragma once

// High utility L-sequence mining under length (K) and size (Z) caps.
//
// Phase 1 grows the coincidence vocabulary level-wise over the label lattice.
// Phase 2 grows L-sequences depth-first by appending vocabulary coincidences.
// Each node keeps a projection: for every C-sequence containing the pattern,
// the best match utility ending at each occupied position. Extending a
// pattern is a merge of that projection with the occurrence list of the
// appended coincidence, so u_max, LWU_k and P_k of every node come out of the
// projection without rescanning the data.
//
// Pruning soundness:
//   - vocabulary: a pattern of length <= K containing c uses c at one
//     position and at most K-1 other distinct eventsets of the same sequence,
//     so both LWU_K(<c>) and u_max(<c>) + LWU_{K-1}(<c>) bound it.
//   - supersets in the label lattice: only LWU_K(<c>) is anti-monotone in c,
//     so lattice growth is gated by LWU under every strategy.
//   - append-extensions of L: the prefix part of the best match is a match of
//     L and the suffix uses at most K-|L| further eventsets, so
//     u_max(L') <= P_K(L). Likewise u_max(L') <= LWU_K(L') <= LWU_K(L).

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "huipm/error.hpp"
#include "huipm/model.hpp"
#include "huipm/utility.hpp"

namespace huipm {

enum class ThresholdMode { Absolute, Relative };

struct MiningConfig {
  UtilityValue xi = 0.0;
  ThresholdMode xi_mode = ThresholdMode::Absolute;
  std::size_t max_length = 1;  // K
  std::size_t max_size = 1;    // Z
  UpperBoundKind strategy = UpperBoundKind::Projected;
  unsigned threads = 1;

  void validate() const {
    if (max_length < 1) throw ArgumentError("max length K must be >= 1");
    if (max_size < 1) throw ArgumentError("max size Z must be >= 1");
    if (threads < 1) throw ArgumentError("thread count must be >= 1");
    if (!(xi >= 0.0)) throw ArgumentError("threshold must be >= 0");
    if (xi_mode == ThresholdMode::Relative && xi > 1.0) throw ArgumentError("relative threshold must be in [0, 1]");
  }
};

struct Pattern {
  LSequence lsequence;
  UtilityValue umax = 0.0;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct MiningStats {
  std::uint64_t candidates_generated = 0;
  std::uint64_t candidates_pruned = 0;
  std::uint64_t patterns_found = 0;
  double elapsed_ms = 0.0;

  MiningStats& operator+=(const MiningStats& o) {
    candidates_generated += o.candidates_generated;
    candidates_pruned += o.candidates_pruned;
    patterns_found += o.patterns_found;
    return *this;
  }
};

struct MiningResult {
  std::vector<Pattern> patterns;
  MiningStats stats;
};

inline UtilityValue resolve_threshold(const MiningConfig& cfg, const CSequenceDataset& d) {
  if (cfg.xi_mode == ThresholdMode::Absolute) return cfg.xi;
  return cfg.xi * dataset_utility(d);
}

namespace detail {

using LabelId = std::uint32_t;
using IdSet = std::vector<LabelId>;

struct Occurrence {
  std::uint32_t position;
  UtilityValue utility;
};

struct SequenceHits {
  std::uint32_t sequence;
  std::vector<Occurrence> hits;  // ascending position
};

using Projection = std::vector<SequenceHits>;  // ascending sequence index

class MiningIndex {
 public:
  explicit MiningIndex(const CSequenceDataset& d) : labels_(d.alphabet()) {
    unit_utility_.reserve(labels_.size());
    for (const auto& l : labels_) unit_utility_.push_back(d.utilities.at(l));
    seqs_.reserve(d.csequences.size());
    for (const auto& c : d.csequences) {
      Seq s;
      for (const auto& e : c.eventsets) {
        IdSet ids;
        for (const auto& l : e.coincidence) ids.push_back(id_of(l));
        s.coincidences.push_back(std::move(ids));
        s.durations.push_back(e.duration);
      }
      s.top = top_k_prefix_sums(c, d.utilities);
      seqs_.push_back(std::move(s));
    }
  }

  std::size_t num_labels() const { return labels_.size(); }
  const Label& label(LabelId id) const { return labels_[id]; }

  Coincidence to_coincidence(const IdSet& ids) const {
    std::vector<Label> v;
    for (auto id : ids) v.push_back(labels_[id]);
    return Coincidence(std::move(v));
  }

  // Occurrences of a single label.
  Projection occurrences(LabelId l) const {
    Projection out;
    for (std::uint32_t s = 0; s < seqs_.size(); ++s) {
      const auto& seq = seqs_[s];
      SequenceHits sh{s, {}};
      for (std::uint32_t j = 0; j < seq.coincidences.size(); ++j) {
        const auto& c = seq.coincidences[j];
        if (std::binary_search(c.begin(), c.end(), l)) sh.hits.push_back({j, unit_utility_[l] * seq.durations[j]});
      }
      if (!sh.hits.empty()) out.push_back(std::move(sh));
    }
    return out;
  }

  // Occurrences of c + {l}, given the occurrences of c.
  Projection occurrences_with(const Projection& base, LabelId l) const {
    Projection out;
    for (const auto& sh : base) {
      const auto& seq = seqs_[sh.sequence];
      SequenceHits next{sh.sequence, {}};
      for (const auto& o : sh.hits) {
        const auto& c = seq.coincidences[o.position];
        if (std::binary_search(c.begin(), c.end(), l)) {
          next.hits.push_back({o.position, o.utility + unit_utility_[l] * seq.durations[o.position]});
        }
      }
      if (!next.hits.empty()) out.push_back(std::move(next));
    }
    return out;
  }

  // Projection of L + c from the projection of L and the occurrences of c.
  static Projection extend(const Projection& prefix, const Projection& occ) {
    Projection out;
    auto a = prefix.begin();
    auto b = occ.begin();
    while (a != prefix.end() && b != occ.end()) {
      if (a->sequence < b->sequence) {
        ++a;
      } else if (b->sequence < a->sequence) {
        ++b;
      } else {
        SequenceHits next{a->sequence, {}};
        auto p = a->hits.begin();
        UtilityValue best = kNoMatch;
        for (const auto& o : b->hits) {
          while (p != a->hits.end() && p->position < o.position) {
            best = std::max(best, p->utility);
            ++p;
          }
          if (best != kNoMatch) next.hits.push_back({o.position, best + o.utility});
        }
        if (!next.hits.empty()) out.push_back(std::move(next));
        ++a;
        ++b;
      }
    }
    return out;
  }

  static UtilityValue max_utility(const Projection& p) {
    UtilityValue sum = 0;
    for (const auto& sh : p) {
      UtilityValue best = 0;
      for (const auto& o : sh.hits) best = std::max(best, o.utility);
      sum += best;
    }
    return sum;
  }

  UtilityValue lwu(const Projection& p, std::size_t k) const {
    if (k == 0) return 0.0;
    UtilityValue sum = 0;
    for (const auto& sh : p) {
      const auto& top = seqs_[sh.sequence].top;
      sum += top[std::min(k, top.size() - 1)];
    }
    return sum;
  }

 private:
  struct Seq {
    std::vector<IdSet> coincidences;
    std::vector<Duration> durations;
    std::vector<UtilityValue> top;
  };

  LabelId id_of(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    return static_cast<LabelId>(it - labels_.begin());
  }

  std::vector<Label> labels_;
  std::vector<UtilityValue> unit_utility_;
  std::vector<Seq> seqs_;
};

struct VocabularyEntry {
  IdSet ids;
  Coincidence coincidence;
  Projection occurrences;
};

struct Vocabulary {
  std::vector<VocabularyEntry> entries;  // (size, lexicographic) order
  MiningStats stats;
};

// Bound of `kind` for a node of length `len` with projection `p`; K is the
// length budget.
inline UtilityValue node_bound(const MiningIndex& index, const Projection& p, std::size_t len, std::size_t K,
                               UpperBoundKind kind, UtilityValue umax) {
  switch (kind) {
    case UpperBoundKind::LWU: return index.lwu(p, K);
    case UpperBoundKind::Projected: return umax + index.lwu(p, K - len);
    case UpperBoundKind::None: break;
  }
  return std::numeric_limits<UtilityValue>::infinity();
}

inline Vocabulary build_vocabulary(const MiningIndex& index, std::size_t K, std::size_t Z, UpperBoundKind kind,
                                   UtilityValue xi_abs) {
  Vocabulary vocab;
  struct Candidate {
    IdSet ids;
    Projection occ;
  };
  std::vector<Candidate> level;
  for (LabelId l = 0; l < index.num_labels(); ++l) level.push_back({{l}, index.occurrences(l)});

  for (std::size_t z = 1; z <= Z && !level.empty(); ++z) {
    std::vector<Candidate> next;
    for (auto& cand : level) {
      ++vocab.stats.candidates_generated;
      const UtilityValue umax = MiningIndex::max_utility(cand.occ);
      const UtilityValue lwu_k = index.lwu(cand.occ, K);
      const bool keep = kind == UpperBoundKind::None || node_bound(index, cand.occ, 1, K, kind, umax) >= xi_abs;
      const bool grow = kind == UpperBoundKind::None || lwu_k >= xi_abs;
      if (grow && z < Z) {
        for (LabelId l = cand.ids.back() + 1; l < index.num_labels(); ++l) {
          IdSet ids = cand.ids;
          ids.push_back(l);
          next.push_back({std::move(ids), index.occurrences_with(cand.occ, l)});
        }
      }
      if (keep) {
        vocab.entries.push_back({cand.ids, index.to_coincidence(cand.ids), std::move(cand.occ)});
      } else {
        ++vocab.stats.candidates_pruned;
      }
    }
    level = std::move(next);
  }
  return vocab;
}

class ExtensionSearch {
 public:
  ExtensionSearch(const MiningIndex& index, const Vocabulary& vocab, std::size_t K, UpperBoundKind kind,
                  UtilityValue xi_abs)
      : index_(index), vocab_(vocab), K_(K), kind_(kind), xi_(xi_abs) {}

  // Mines every pattern whose first coincidence is vocabulary entry `root`.
  void run_root(std::size_t root) {
    const auto& e = vocab_.entries[root];
    path_.assign(1, root);
    visit(e.occurrences, /*counted=*/false);
  }

  std::vector<Pattern>& patterns() { return patterns_; }
  const MiningStats& stats() const { return stats_; }

 private:
  void visit(const Projection& proj, bool counted) {
    if (counted) ++stats_.candidates_generated;
    const std::size_t len = path_.size();
    const UtilityValue umax = MiningIndex::max_utility(proj);
    if (umax >= xi_) emit(umax);
    if (len >= K_) return;
    if (kind_ != UpperBoundKind::None && node_bound(index_, proj, len, K_, kind_, umax) < xi_) {
      // Roots were already charged in the vocabulary phase.
      if (counted) ++stats_.candidates_pruned;
      return;
    }
    for (std::size_t v = 0; v < vocab_.entries.size(); ++v) {
      path_.push_back(v);
      visit(MiningIndex::extend(proj, vocab_.entries[v].occurrences), true);
      path_.pop_back();
    }
  }

  void emit(UtilityValue umax) {
    std::vector<Coincidence> cs;
    cs.reserve(path_.size());
    for (auto v : path_) cs.push_back(vocab_.entries[v].coincidence);
    patterns_.push_back({LSequence(std::move(cs)), umax});
    ++stats_.patterns_found;
  }

  const MiningIndex& index_;
  const Vocabulary& vocab_;
  std::size_t K_;
  UpperBoundKind kind_;
  UtilityValue xi_;
  std::vector<std::size_t> path_;
  std::vector<Pattern> patterns_;
  MiningStats stats_;
};

inline void sort_patterns(std::vector<Pattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(),
            [](const Pattern& a, const Pattern& b) { return a.lsequence < b.lsequence; });
}

}  // namespace detail

// The coincidence vocabulary: every coincidence of size <= Z that passes the
// strategy's bound as a single-coincidence pattern under length budget K.
inline std::vector<Coincidence> promising_coincidences(const CSequenceDataset& d, const MiningConfig& cfg,
                                                       UtilityValue xi_abs) {
  cfg.validate();
  const detail::MiningIndex index(d);
  const auto vocab = detail::build_vocabulary(index, cfg.max_length, cfg.max_size, cfg.strategy, xi_abs);
  std::vector<Coincidence> out;
  out.reserve(vocab.entries.size());
  for (const auto& e : vocab.entries) out.push_back(e.coincidence);
  return out;
}

// All L with |L| <= K, size(L) <= Z and u_max(L) >= xi, in canonical order.
// The strategy only changes the work done, never the result.
inline MiningResult mine(const CSequenceDataset& d, const MiningConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const UtilityValue xi_abs = resolve_threshold(cfg, d);
  const detail::MiningIndex index(d);
  const auto vocab = detail::build_vocabulary(index, cfg.max_length, cfg.max_size, cfg.strategy, xi_abs);

  MiningResult result;
  result.stats = vocab.stats;
  const std::size_t roots = vocab.entries.size();
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(cfg.threads, std::max<std::size_t>(roots, 1)));

  std::vector<detail::ExtensionSearch> searches;
  searches.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) searches.emplace_back(index, vocab, cfg.max_length, cfg.strategy, xi_abs);

  if (workers <= 1) {
    for (std::size_t r = 0; r < roots; ++r) searches.front().run_root(r);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < roots; r += workers) searches[w].run_root(r);
      });
    }
    for (auto& t : pool) t.join();
  }

  for (auto& s : searches) {
    result.stats += s.stats();
    auto& p = s.patterns();
    result.patterns.insert(result.patterns.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  detail::sort_patterns(result.patterns);
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace huipm
