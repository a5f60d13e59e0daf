#include "cikit/avalanche.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cikit {

AvalancheStats avalanche_stats(const KeyedHash& inner, const HashKey& key,
                               std::uint64_t trials, std::uint64_t seed,
                               std::size_t message_bytes) {
  if (trials < 1) throw std::invalid_argument("avalanche_stats: need at least one trial");
  if (message_bytes < 1) throw std::invalid_argument("avalanche_stats: empty messages");

  const int n = inner.digest_bits();
  std::vector<std::uint64_t> flip_counts(static_cast<std::size_t>(n), 0);
  double sum = 0.0;
  double sum_sq = 0.0;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    // Per-trial generator keyed by (seed, trial): trials can be evaluated in
    // any order, or in parallel, without changing the aggregate.
    std::seed_seq sq{seed, trial};
    std::mt19937_64 rng(sq);

    std::vector<std::uint8_t> message(message_bytes);
    for (auto& byte : message) byte = static_cast<std::uint8_t>(rng());
    const std::size_t flip_bit =
        std::uniform_int_distribution<std::size_t>(0, message_bytes * 8 - 1)(rng);

    std::vector<std::uint8_t> flipped = message;
    flipped[flip_bit / 8] ^= static_cast<std::uint8_t>(1u << (flip_bit % 8));

    const Digest a = chaotic_hash(inner, key, message);
    const Digest b = chaotic_hash(inner, key, flipped);

    int distance = 0;
    for (int i = 1; i <= n; ++i) {
      if (a.get(i) != b.get(i)) {
        ++distance;
        ++flip_counts[static_cast<std::size_t>(i - 1)];
      }
    }
    sum += distance;
    sum_sq += static_cast<double>(distance) * distance;
  }

  AvalancheStats stats;
  stats.trials = trials;
  stats.mean_distance = sum / static_cast<double>(trials);
  const double variance =
      sum_sq / static_cast<double>(trials) - stats.mean_distance * stats.mean_distance;
  stats.stddev_distance = std::sqrt(std::max(variance, 0.0));
  stats.bit_flip_rates.reserve(flip_counts.size());
  for (std::uint64_t count : flip_counts)
    stats.bit_flip_rates.push_back(static_cast<double>(count) /
                                   static_cast<double>(trials));
  const auto [lo, hi] =
      std::minmax_element(stats.bit_flip_rates.begin(), stats.bit_flip_rates.end());
  stats.min_flip_rate = *lo;
  stats.max_flip_rate = *hi;
  return stats;
}

}  // namespace cikit
