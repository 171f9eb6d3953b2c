#pragma once

// Command line driver: `mine`, `gen` and `check`.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal invariant
// violation (strategies or oracle disagree).

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "huipm/error.hpp"
#include "huipm/io.hpp"
#include "huipm/miner.hpp"
#include "huipm/oracle.hpp"
#include "huipm/report.hpp"
#include "huipm/running_example.hpp"
#include "huipm/transform.hpp"
#include "huipm/utility.hpp"

namespace huipm::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kInvariant = 3 };

inline UpperBoundKind parse_strategy(const std::string& s) {
  if (s == "none") return UpperBoundKind::None;
  if (s == "ldc" || s == "lwu") return UpperBoundKind::LWU;
  if (s == "pdc" || s == "projected") return UpperBoundKind::Projected;
  throw ArgumentError("unknown strategy '" + s + "' (expected none, ldc or pdc)");
}

inline std::vector<UpperBoundKind> parse_strategies(const std::string& list) {
  std::vector<UpperBoundKind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto k = parse_strategy(item);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  if (out.empty()) throw ArgumentError("no strategy given");
  return out;
}

struct MineOptions {
  std::string data;
  std::string utilities;
  std::optional<double> default_utility;
  double xi = 0.0;
  std::string xi_mode = "absolute";
  std::size_t K = 1;
  std::size_t Z = 1;
  std::string strategy = "pdc";
  bool benchmark = false;
  std::string output;
  std::string format = "json";
  unsigned threads = 1;
};

inline report::RunReport run_mine(const MineOptions& o) {
  MiningConfig cfg;
  cfg.xi = o.xi;
  if (o.xi_mode == "absolute") {
    cfg.xi_mode = ThresholdMode::Absolute;
  } else if (o.xi_mode == "relative") {
    cfg.xi_mode = ThresholdMode::Relative;
  } else {
    throw ArgumentError("--xi-mode must be absolute or relative");
  }
  cfg.max_length = o.K;
  cfg.max_size = o.Z;
  cfg.threads = o.threads;
  const auto strategies = parse_strategies(o.strategy);
  cfg.strategy = strategies.front();
  cfg.validate();
  if (o.utilities.empty() && !o.default_utility) throw ArgumentError("give --utilities or --default-utility");

  const auto edata = io::parse_dataset_file(o.data);
  const UtilityTable table = o.utilities.empty() ? UtilityTable{} : io::parse_utilities_file(o.utilities);
  const auto cdata = transform_dataset(edata, table, o.default_utility);

  report::RunReport r;
  r.config = cfg;
  r.strategies = strategies;
  r.dataset = {edata.sequences.size(), edata.num_intervals(), dataset_utility(cdata), cdata.alphabet()};
  r.threshold = resolve_threshold(cfg, cdata);
  r.include_timings = o.benchmark;

  std::optional<std::vector<Pattern>> first;
  bool agree = true;
  for (auto s : strategies) {
    auto run_cfg = cfg;
    run_cfg.strategy = s;
    auto result = mine(cdata, run_cfg);
    r.runs.push_back({s, result.stats});
    if (!first) {
      first = std::move(result.patterns);
    } else if (*first != result.patterns) {
      agree = false;
    }
  }
  r.patterns = std::move(*first);
  if (strategies.size() > 1) r.strategies_agree = agree;
  return r;
}

struct GenOptions {
  oracle::GeneratorParams params;
  std::string output;
  std::string utilities_output;
};

struct CheckOptions {
  std::size_t instances = 100;
  std::uint64_t seed = 1;
};

// Oracle equivalence over the running example and seeded random instances.
// Returns the number of disagreeing instances.
inline std::size_t run_check(const CheckOptions& o, std::ostream& log) {
  std::size_t failures = 0;
  auto check_one = [&](const CSequenceDataset& d, UtilityValue xi, std::size_t K, std::size_t Z,
                       const std::string& name) {
    const auto expected = oracle::brute_force_mine(d, xi, K, Z);
    for (auto s : {UpperBoundKind::None, UpperBoundKind::LWU, UpperBoundKind::Projected}) {
      MiningConfig cfg;
      cfg.xi = xi;
      cfg.max_length = K;
      cfg.max_size = Z;
      cfg.strategy = s;
      const auto got = mine(d, cfg).patterns;
      bool same = got.size() == expected.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) {
        same = got[i].lsequence == expected[i].lsequence && got[i].umax == expected[i].umax;
      }
      if (!same) {
        ++failures;
        log << "MISMATCH " << name << " strategy=" << to_string(s) << " xi=" << xi << " K=" << K << " Z=" << Z
            << ": miner " << got.size() << " patterns, oracle " << expected.size() << '\n';
      }
    }
  };

  const auto example = transform_dataset(running_example::dataset(), running_example::utilities());
  for (double xi : {0.0, 10.0, 22.0, 33.5, 60.0}) check_one(example, xi, 3, 2, "running-example");

  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.instances; ++i) {
    oracle::GeneratorParams p;
    p.seed = rng();
    p.num_sequences = 1 + rng() % 5;
    p.max_intervals_per_seq = 1 + rng() % 6;
    p.alphabet_size = 1 + rng() % 4;
    const auto [edata, table] = oracle::random_dataset(p);
    const auto d = transform_dataset(edata, table);
    const double ud = oracle::dataset_utility(d);
    const double xi = std::uniform_real_distribution<double>(0.0, ud)(rng);
    const std::size_t K = 1 + rng() % 3;
    const std::size_t Z = 1 + rng() % 2;
    check_one(d, xi, K, Z, "random#" + std::to_string(i));
  }
  log << "check: " << (o.instances + 1) << " instances, " << failures << " mismatches\n";
  return failures;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High utility pattern mining over interval-based event sequences"};
  app.require_subcommand(1);

  MineOptions mo;
  auto* mine_cmd = app.add_subcommand("mine", "Mine high utility L-sequences");
  mine_cmd->add_option("--data", mo.data, "Interval dataset (id label begin finish)")->required();
  mine_cmd->add_option("--utilities", mo.utilities, "External utilities (label value)");
  mine_cmd->add_option("--default-utility", mo.default_utility, "Utility for labels missing from --utilities");
  mine_cmd->add_option("--xi", mo.xi, "Minimum utility threshold")->required();
  mine_cmd->add_option("--xi-mode", mo.xi_mode, "absolute | relative (fraction of total utility)");
  mine_cmd->add_option("-K", mo.K, "Maximum pattern length");
  mine_cmd->add_option("-Z", mo.Z, "Maximum coincidence size");
  mine_cmd->add_option("--strategy", mo.strategy, "Pruning strategies: none, ldc, pdc (comma separated)");
  mine_cmd->add_flag("--benchmark", mo.benchmark, "Report per-strategy timings");
  mine_cmd->add_option("--output", mo.output, "Write the report here instead of stdout");
  mine_cmd->add_option("--format", mo.format, "json | table");
  mine_cmd->add_option("--threads", mo.threads, "Worker threads for the extension search");

  GenOptions go;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a seeded random dataset");
  gen_cmd->add_option("--seed", go.params.seed);
  gen_cmd->add_option("--sequences", go.params.num_sequences);
  gen_cmd->add_option("--max-intervals", go.params.max_intervals_per_seq);
  gen_cmd->add_option("--alphabet", go.params.alphabet_size);
  gen_cmd->add_option("--max-time", go.params.max_time);
  gen_cmd->add_option("--max-duration", go.params.max_duration);
  gen_cmd->add_option("--max-utility", go.params.max_external_utility);
  gen_cmd->add_option("--output", go.output, "Dataset file (stdout if omitted)");
  gen_cmd->add_option("--utilities-output", go.utilities_output, "Utility table file");

  CheckOptions co;
  auto* check_cmd = app.add_subcommand("check", "Compare the miner against the brute-force oracle");
  check_cmd->add_option("--instances", co.instances, "Random instances besides the running example");
  check_cmd->add_option("--seed", co.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*mine_cmd) {
      if (mo.format != "json" && mo.format != "table") throw ArgumentError("--format must be json or table");
      const auto r = run_mine(mo);
      std::ofstream file;
      if (!mo.output.empty()) {
        file.open(mo.output);
        if (!file) throw DataError("cannot write " + mo.output);
      }
      std::ostream& dst = mo.output.empty() ? out : file;
      if (mo.format == "json") {
        dst << report::to_json(r).dump(2) << '\n';
      } else {
        report::write_table(dst, r);
      }
      if (r.strategies_agree && !*r.strategies_agree) {
        err << "strategies returned different pattern sets\n";
        return kInvariant;
      }
    } else if (*gen_cmd) {
      const auto [data, table] = oracle::random_dataset(go.params);
      if (go.output.empty()) {
        io::write_dataset(out, data);
      } else {
        std::ofstream f(go.output);
        if (!f) throw DataError("cannot write " + go.output);
        io::write_dataset(f, data);
      }
      if (!go.utilities_output.empty()) {
        std::ofstream f(go.utilities_output);
        if (!f) throw DataError("cannot write " + go.utilities_output);
        io::write_utilities(f, table);
      }
    } else if (*check_cmd) {
      if (run_check(co, out) != 0) return kInvariant;
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}

}  // namespace huipm::cli
