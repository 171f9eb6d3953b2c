#pragma once

#include <cstdint>
#include <random>

#include "huipm/model.hpp"
#include "huipm/oracle.hpp"
#include "huipm/running_example.hpp"
#include "huipm/transform.hpp"

namespace huipm::testing {

inline CSequenceDataset example_cdata() {
  return transform_dataset(running_example::dataset(), running_example::utilities());
}

inline const CSequence& cseq(const CSequenceDataset& d, SequenceId id) {
  for (const auto& c : d.csequences)
    if (c.id == id) return c;
  throw std::out_of_range("no sequence");
}

// Small random instance in the oracle-sized regime.
struct Instance {
  CSequenceDataset data;
  std::uint64_t seed;
};

inline Instance random_instance(std::mt19937_64& rng) {
  oracle::GeneratorParams p;
  p.seed = rng();
  p.num_sequences = 1 + rng() % 5;
  p.max_intervals_per_seq = 1 + rng() % 6;
  p.alphabet_size = 1 + rng() % 4;
  auto [e, t] = oracle::random_dataset(p);
  return {transform_dataset(e, t), p.seed};
}

}  // namespace huipm::testing
