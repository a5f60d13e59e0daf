#ifndef CIKIT_AVALANCHE_HPP
#define CIKIT_AVALANCHE_HPP

#include <cstdint>
#include <vector>

#include "cikit/keyed_hash.hpp"

namespace cikit {

struct AvalancheStats {
  std::uint64_t trials = 0;
  double mean_distance = 0.0;    // mean Hamming distance between digest pairs
  double stddev_distance = 0.0;  // population standard deviation
  std::vector<double> bit_flip_rates;  // per output cell, index 0 = cell 1
  double min_flip_rate = 0.0;
  double max_flip_rate = 0.0;
};

/// Flips one random bit of random fixed-length messages and measures how the
/// keyed hash digest reacts. Trials are seeded individually from `seed`, so
/// results are reproducible and independent of evaluation order.
AvalancheStats avalanche_stats(const KeyedHash& inner, const HashKey& key,
                               std::uint64_t trials, std::uint64_t seed,
                               std::size_t message_bytes = 32);

}  // namespace cikit

#endif
