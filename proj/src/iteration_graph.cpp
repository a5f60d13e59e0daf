#include "cikit/iteration_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

namespace cikit {

IterationGraph::IterationGraph(int arity, std::vector<std::uint32_t> targets)
    : arity_(arity), targets_(std::move(targets)) {}

std::uint32_t IterationGraph::target(std::uint32_t source, int i) const {
  if (source >= vertex_count()) throw std::out_of_range("IterationGraph: bad vertex");
  if (i < 1 || i > arity_) throw std::out_of_range("IterationGraph: bad update index");
  return targets_[static_cast<std::size_t>(source) * arity_ + (i - 1)];
}

std::span<const std::uint32_t> IterationGraph::targets_of(std::uint32_t source) const {
  if (source >= vertex_count()) throw std::out_of_range("IterationGraph: bad vertex");
  return {targets_.data() + static_cast<std::size_t>(source) * arity_,
          static_cast<std::size_t>(arity_)};
}

IterationGraph build_gamma(const Update& f) {
  const int n = f.arity();
  if (n > IterationGraph::kMaxArity)
    throw std::invalid_argument("build_gamma: arity " + std::to_string(n) +
                                " exceeds limit " + std::to_string(IterationGraph::kMaxArity));
  const std::uint32_t vertices = std::uint32_t{1} << n;
  std::vector<std::uint32_t> targets(static_cast<std::size_t>(vertices) * n);

  if (const auto* table = dynamic_cast<const UpdateFunction*>(&f)) {
    for (std::uint32_t x = 0; x < vertices; ++x) {
      const std::uint32_t fx = table->image_encoded(x);
      for (int i = 0; i < n; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        targets[static_cast<std::size_t>(x) * n + i] = (x & ~bit) | (fx & bit);
      }
    }
  } else {
    for (std::uint32_t x = 0; x < vertices; ++x) {
      const std::uint32_t fx =
          static_cast<std::uint32_t>(f.image(StateVector::from_encoding(n, x)).encoding());
      for (int i = 0; i < n; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        targets[static_cast<std::size_t>(x) * n + i] = (x & ~bit) | (fx & bit);
      }
    }
  }
  return IterationGraph(n, std::move(targets));
}

// Iterative Tarjan; recursion depth on a 2^N-vertex graph rules out the
// recursive form.
std::uint32_t count_sccs(const IterationGraph& g) {
  const std::uint32_t v_count = g.vertex_count();
  constexpr std::uint32_t kUnvisited = 0xFFFFFFFFu;
  std::vector<std::uint32_t> index(v_count, kUnvisited);
  std::vector<std::uint32_t> lowlink(v_count);
  std::vector<bool> on_stack(v_count, false);
  std::vector<std::uint32_t> stack;

  struct Frame {
    std::uint32_t vertex;
    int next_arc;  // 0-based arc cursor
  };
  std::vector<Frame> call_stack;
  std::uint32_t next_index = 0;
  std::uint32_t scc_count = 0;

  for (std::uint32_t root = 0; root < v_count; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const std::uint32_t v = frame.vertex;
      if (frame.next_arc < g.arity()) {
        const std::uint32_t w = g.targets_of(v)[frame.next_arc++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          ++scc_count;
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
          } while (w != v);
        }
        call_stack.pop_back();
        if (!call_stack.empty()) {
          const std::uint32_t parent = call_stack.back().vertex;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }
  return scc_count;
}

bool is_strongly_connected(const IterationGraph& g) { return count_sccs(g) == 1; }

bool is_chaotic(const Update& f) { return is_strongly_connected(build_gamma(f)); }

std::optional<std::vector<int>> find_strategy_path(const Update& f, const StateVector& x,
                                                   const StateVector& y) {
  if (x.size() != f.arity() || y.size() != f.arity())
    throw std::invalid_argument("find_strategy_path: arity mismatch");
  if (x == y) return std::vector<int>{};

  const IterationGraph g = build_gamma(f);
  const auto start = static_cast<std::uint32_t>(x.encoding());
  const auto goal = static_cast<std::uint32_t>(y.encoding());

  constexpr std::uint32_t kUnseen = 0xFFFFFFFFu;
  std::vector<std::uint32_t> parent(g.vertex_count(), kUnseen);
  std::vector<int> via(g.vertex_count(), 0);
  std::deque<std::uint32_t> queue;
  parent[start] = start;
  queue.push_back(start);

  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    const auto targets = g.targets_of(v);
    for (int i = 1; i <= g.arity(); ++i) {  // lowest index first for reproducible paths
      const std::uint32_t w = targets[i - 1];
      if (parent[w] != kUnseen) continue;
      parent[w] = v;
      via[w] = i;
      if (w == goal) {
        std::vector<int> path;
        for (std::uint32_t c = goal; c != start; c = parent[c]) path.push_back(via[c]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace cikit
