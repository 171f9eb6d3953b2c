#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "huipm/miner.hpp"
#include "huipm/oracle.hpp"

namespace huipm {
namespace {

using testing::example_cdata;

MiningConfig config(UtilityValue xi, std::size_t K, std::size_t Z, UpperBoundKind s = UpperBoundKind::Projected) {
  MiningConfig cfg;
  cfg.xi = xi;
  cfg.max_length = K;
  cfg.max_size = Z;
  cfg.strategy = s;
  return cfg;
}

constexpr UpperBoundKind kAll[] = {UpperBoundKind::None, UpperBoundKind::LWU, UpperBoundKind::Projected};

TEST(ResolveThreshold, Modes) {
  const auto d = example_cdata();
  auto cfg = config(0.25, 4, 5);
  cfg.xi_mode = ThresholdMode::Relative;
  EXPECT_EQ(resolve_threshold(cfg, d), 33.5);
  cfg.xi = 0;
  EXPECT_EQ(resolve_threshold(cfg, d), 0.0);
  EXPECT_EQ(resolve_threshold(config(22, 3, 2), d), 22.0);
}

TEST(MiningConfig, Validation) {
  EXPECT_THROW(config(1, 0, 1).validate(), ArgumentError);
  EXPECT_THROW(config(1, 1, 0).validate(), ArgumentError);
  EXPECT_THROW(config(-1, 1, 1).validate(), ArgumentError);
  auto rel = config(1.5, 1, 1);
  rel.xi_mode = ThresholdMode::Relative;
  EXPECT_THROW(rel.validate(), ArgumentError);
}

TEST(PromisingCoincidences, Examples) {
  const auto d = example_cdata();
  // P_4(<{C}>) = 111 >= 33.5.
  const auto v = promising_coincidences(d, config(33.5, 4, 5), 33.5);
  EXPECT_NE(std::find(v.begin(), v.end(), Coincidence{"C"}), v.end());
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));

  EXPECT_TRUE(promising_coincidences(d, config(135, 4, 5), 135).empty());
  EXPECT_TRUE(promising_coincidences(d, config(135, 4, 5, UpperBoundKind::LWU), 135).empty());

  // Everything is promising at zero: all non-empty subsets of 6 labels of size <= 2.
  EXPECT_EQ(promising_coincidences(d, config(0, 4, 2), 0).size(), 6u + 15u);
}

TEST(Mine, RunningExampleIncludesAB) {
  const auto d = example_cdata();
  for (auto s : kAll) {
    const auto r = mine(d, config(22, 3, 2, s));
    const auto it = std::find_if(r.patterns.begin(), r.patterns.end(),
                                 [](const Pattern& p) { return p.lsequence == LSequence{{"A"}, {"B"}}; });
    ASSERT_NE(it, r.patterns.end()) << to_string(s);
    EXPECT_EQ(it->umax, 22.0);
    EXPECT_EQ(r.patterns.size(), 96u);  // brute force, tests/derive_expected.py
  }
}

TEST(Mine, SingleLabelsAtZeroThreshold) {
  const auto d = example_cdata();
  const auto r = mine(d, config(0, 1, 1));
  ASSERT_EQ(r.patterns.size(), 6u);
  const std::pair<const char*, UtilityValue> expected[] = {{"A", 22}, {"B", 16}, {"C", 9},
                                                           {"D", 9},  {"E", 18}, {"F", 15}};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.patterns[i].lsequence, LSequence{{expected[i].first}});
    EXPECT_EQ(r.patterns[i].umax, expected[i].second);
  }
}

TEST(Mine, OutputIsCanonicallySorted) {
  const auto r = mine(example_cdata(), config(10, 3, 2));
  EXPECT_TRUE(std::is_sorted(r.patterns.begin(), r.patterns.end(),
                             [](const Pattern& a, const Pattern& b) { return a.lsequence < b.lsequence; }));
}

// A coincidence whose projected bound fails can still have a high utility
// superset; lattice growth must not use the projected bound.
TEST(Mine, SupersetOfLowProjectedCoincidenceIsFound) {
  CSequenceDataset d;
  d.csequences.push_back(CSequence{1, {{{"A", "B"}, 1}}});
  d.utilities = UtilityTable{{"A", 1}, {"B", 100}};
  for (auto s : kAll) {
    const auto r = mine(d, config(50, 1, 2, s));
    ASSERT_EQ(r.patterns.size(), 2u) << to_string(s);
    EXPECT_EQ(r.patterns[0].lsequence, LSequence{{"B"}});
    EXPECT_EQ(r.patterns[1].lsequence, (LSequence{{"A", "B"}}));
    EXPECT_EQ(r.patterns[1].umax, 101.0);
  }
}

TEST(Mine, MatchesOracleOnRandomInstances) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = testing::random_instance(rng);
    const UtilityValue ud = oracle::dataset_utility(inst.data);
    const UtilityValue xi = std::uniform_real_distribution<double>(0.0, ud)(rng);
    const std::size_t K = 1 + rng() % 3, Z = 1 + rng() % 2;
    const auto expected = oracle::brute_force_mine(inst.data, xi, K, Z);
    for (auto s : kAll) {
      const auto got = mine(inst.data, config(xi, K, Z, s));
      ASSERT_EQ(got.patterns.size(), expected.size()) << "seed " << inst.seed << " " << to_string(s);
      for (std::size_t i = 0; i < expected.size(); ++i) {
        ASSERT_EQ(got.patterns[i].lsequence, expected[i].lsequence);
        ASSERT_EQ(got.patterns[i].umax, expected[i].umax);
      }
      const auto& st = got.stats;
      ASSERT_LE(st.candidates_pruned, st.candidates_generated);
      ASSERT_LE(st.patterns_found, st.candidates_generated - st.candidates_pruned);
      ASSERT_EQ(st.patterns_found, got.patterns.size());
      for (const auto& p : got.patterns) {
        ASSERT_LE(p.lsequence.length(), K);
        ASSERT_LE(p.lsequence.size(), Z);
        ASSERT_GE(p.umax, xi);
      }
    }
  }
}

TEST(Mine, PruningReducesWork) {
  const auto d = example_cdata();
  const auto none = mine(d, config(40, 3, 2, UpperBoundKind::None)).stats;
  const auto ldc = mine(d, config(40, 3, 2, UpperBoundKind::LWU)).stats;
  EXPECT_EQ(none.candidates_pruned, 0u);
  EXPECT_LT(ldc.candidates_generated, none.candidates_generated);
}

TEST(Mine, ThreadCountDoesNotChangeResult) {
  oracle::GeneratorParams p;
  p.seed = 5;
  p.num_sequences = 40;
  p.max_intervals_per_seq = 8;
  p.alphabet_size = 6;
  auto [e, t] = oracle::random_dataset(p);
  const auto d = transform_dataset(e, t);
  auto cfg = config(oracle::dataset_utility(d) * 0.05, 3, 2);
  const auto one = mine(d, cfg);
  cfg.threads = 4;
  const auto four = mine(d, cfg);
  EXPECT_EQ(one.patterns, four.patterns);
  EXPECT_EQ(one.stats.candidates_generated, four.stats.candidates_generated);
  EXPECT_EQ(one.stats.candidates_pruned, four.stats.candidates_pruned);
}

}  // namespace
}  // namespace huipm
