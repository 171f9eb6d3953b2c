#pragma once

// Run reports: a JSON document for machines, an aligned table for people.

#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "huipm/miner.hpp"
#include "huipm/model.hpp"
#include "huipm/utility.hpp"

namespace huipm::report {

struct StrategyRun {
  UpperBoundKind strategy;
  MiningStats stats;
};

struct DatasetSummary {
  std::size_t sequences = 0;
  std::size_t intervals = 0;
  UtilityValue utility = 0;
  std::vector<Label> alphabet;
};

struct RunReport {
  MiningConfig config;
  std::vector<UpperBoundKind> strategies;
  DatasetSummary dataset;
  UtilityValue threshold = 0;
  std::vector<Pattern> patterns;
  std::vector<StrategyRun> runs;
  bool include_timings = false;
  std::optional<bool> strategies_agree;
};

inline nlohmann::ordered_json pattern_labels(const LSequence& l) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : l.coincidences()) arr.push_back(c.labels());
  return arr;
}

inline nlohmann::ordered_json to_json(const RunReport& r) {
  using json = nlohmann::ordered_json;
  json strategies = json::array();
  for (auto s : r.strategies) strategies.push_back(std::string(to_string(s)));
  json j;
  j["config"] = {
      {"xi", r.config.xi},
      {"xi_mode", r.config.xi_mode == ThresholdMode::Absolute ? "absolute" : "relative"},
      {"K", r.config.max_length},
      {"Z", r.config.max_size},
      {"strategies", strategies},
      {"threads", r.config.threads},
  };
  j["dataset"] = {
      {"sequences", r.dataset.sequences},
      {"intervals", r.dataset.intervals},
      {"utility", r.dataset.utility},
      {"alphabet", r.dataset.alphabet},
  };
  j["threshold"] = r.threshold;
  json patterns = json::array();
  for (const auto& p : r.patterns) patterns.push_back({{"pattern", pattern_labels(p.lsequence)}, {"umax", p.umax}});
  j["patterns"] = std::move(patterns);
  json stats = json::object();
  for (const auto& run : r.runs) {
    json s = {
        {"candidates_generated", run.stats.candidates_generated},
        {"candidates_pruned", run.stats.candidates_pruned},
        {"patterns_found", run.stats.patterns_found},
    };
    if (r.include_timings) s["elapsed_ms"] = run.stats.elapsed_ms;
    stats[std::string(to_string(run.strategy))] = std::move(s);
  }
  j["stats"] = std::move(stats);
  if (r.strategies_agree) j["strategies_agree"] = *r.strategies_agree;
  return j;
}

inline std::string format_utility(UtilityValue v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline void write_table(std::ostream& os, const RunReport& r) {
  os << "sequences: " << r.dataset.sequences << "  intervals: " << r.dataset.intervals
     << "  u_d: " << format_utility(r.dataset.utility) << "  labels: " << r.dataset.alphabet.size() << '\n';
  os << "threshold: " << format_utility(r.threshold) << "  K: " << r.config.max_length << "  Z: " << r.config.max_size
     << '\n';
  os << '\n' << std::left << std::setw(12) << "umax" << "pattern\n";
  for (const auto& p : r.patterns) {
    std::ostringstream pat;
    pat << p.lsequence;
    os << std::left << std::setw(12) << format_utility(p.umax) << pat.str() << '\n';
  }
  os << '\n' << std::left << std::setw(10) << "strategy" << std::right << std::setw(12) << "generated"
     << std::setw(12) << "pruned" << std::setw(12) << "patterns";
  if (r.include_timings) os << std::setw(14) << "elapsed_ms";
  os << '\n';
  for (const auto& run : r.runs) {
    os << std::left << std::setw(10) << to_string(run.strategy) << std::right << std::setw(12)
       << run.stats.candidates_generated << std::setw(12) << run.stats.candidates_pruned << std::setw(12)
       << run.stats.patterns_found;
    if (r.include_timings) os << std::setw(14) << std::fixed << std::setprecision(3) << run.stats.elapsed_ms;
    os << '\n';
  }
  if (r.strategies_agree) os << "strategies agree: " << (*r.strategies_agree ? "yes" : "NO") << '\n';
}

}  // namespace huipm::report
