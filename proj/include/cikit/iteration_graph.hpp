#ifndef CIKIT_ITERATION_GRAPH_HPP
#define CIKIT_ITERATION_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cikit/state_vector.hpp"
#include "cikit/update.hpp"

namespace cikit {

/// Asynchronous iteration graph: vertices are the 2^N canonical state
/// encodings; for every state x and index i there is an arc x -> F_f(i, x).
/// Parallel arcs and self-loops are kept, so out-degree is exactly N
/// everywhere and there are N * 2^N arcs. Arcs are ordered by (source, i).
class IterationGraph {
 public:
  static constexpr int kMaxArity = 20;

  int arity() const noexcept { return arity_; }
  std::uint32_t vertex_count() const noexcept { return std::uint32_t{1} << arity_; }
  std::uint64_t arc_count() const noexcept {
    return static_cast<std::uint64_t>(arity_) << arity_;
  }

  /// Target of the arc labelled i (1-based) out of `source`.
  std::uint32_t target(std::uint32_t source, int i) const;
  /// The N targets out of `source`, ordered by update index.
  std::span<const std::uint32_t> targets_of(std::uint32_t source) const;

 private:
  friend IterationGraph build_gamma(const Update& f);
  IterationGraph(int arity, std::vector<std::uint32_t> targets);

  int arity_;
  std::vector<std::uint32_t> targets_;  // arc (x, i) at x * N + (i - 1)
};

IterationGraph build_gamma(const Update& f);

/// Number of strongly connected components (Tarjan, iterative).
std::uint32_t count_sccs(const IterationGraph& g);

/// True iff every ordered vertex pair is joined by a directed path.
bool is_strongly_connected(const IterationGraph& g);

/// Chaos certificate: the asynchronous iterations of f are chaotic exactly
/// when the iteration graph is strongly connected.
bool is_chaotic(const Update& f);

/// Update indices along a shortest directed path from x to y in the
/// iteration graph (ties broken toward the lowest index), or nullopt when y
/// is unreachable. Replaying the result as a unary strategy drives x to y.
std::optional<std::vector<int>> find_strategy_path(const Update& f, const StateVector& x,
                                                   const StateVector& y);

}  // namespace cikit

#endif
