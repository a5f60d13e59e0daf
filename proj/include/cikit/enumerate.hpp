#ifndef CIKIT_ENUMERATE_HPP
#define CIKIT_ENUMERATE_HPP

#include <cstdint>
#include <functional>

#include "cikit/update.hpp"

namespace cikit {

struct ChaoticCount {
  int arity = 0;
  std::uint64_t total = 0;    // (2^N)^(2^N) truth tables
  std::uint64_t chaotic = 0;  // those whose iteration graph is strongly connected
};

/// Number of truth tables on N cells: (2^N)^(2^N).
std::uint64_t function_space_size(int arity);

/// The truth table at position `index` in the canonical enumeration order:
/// entry e is digit e of `index` written base 2^N.
UpdateFunction function_from_index(int arity, std::uint64_t index);

/// Exhaustively scans every update function on N cells (N <= 3) and counts
/// the chaotic ones via strong-connectivity of the iteration graph. The scan
/// is partitioned into deterministic chunks handed to `threads` workers
/// (0 = hardware concurrency); the count is an order-independent sum.
/// `progress(done, total)` is invoked as chunks finish, if provided.
ChaoticCount enumerate_chaotic(
    int arity, unsigned threads = 0,
    const std::function<void(std::uint64_t done, std::uint64_t total)>& progress = {});

}  // namespace cikit

#endif
