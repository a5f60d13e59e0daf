#include "cikit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cikit {

namespace {

constexpr int kMaxEnumerationArity = 3;

// Tarjan strong-connectivity specialized to the <= 16-vertex graphs of the
// enumeration scan; fixed-size arrays, no allocation. Arc targets are
// computed on the fly from the truth table.
bool strongly_connected_small(int n, const std::uint8_t* table) {
  const int v_count = 1 << n;
  std::array<std::int8_t, 16> index{}, lowlink{};
  std::array<bool, 16> on_stack{};
  std::array<std::int8_t, 16> stack{};
  std::array<std::int8_t, 16> frame_vertex{};
  std::array<std::int8_t, 16> frame_arc{};
  index.fill(-1);

  int stack_top = 0;
  int call_top = 0;
  std::int8_t next_index = 0;

  // One DFS from vertex 0; any vertex it misses breaks connectivity anyway.
  frame_vertex[call_top] = 0;
  frame_arc[call_top] = 0;
  ++call_top;
  index[0] = lowlink[0] = next_index++;
  stack[stack_top++] = 0;
  on_stack[0] = true;

  while (call_top > 0) {
    const int v = frame_vertex[call_top - 1];
    if (frame_arc[call_top - 1] < n) {
      const int i = frame_arc[call_top - 1]++;
      const int bit = 1 << i;
      const int w = (v & ~bit) | (table[v] & bit);
      if (index[w] < 0) {
        index[w] = lowlink[w] = next_index++;
        stack[stack_top++] = static_cast<std::int8_t>(w);
        on_stack[w] = true;
        frame_vertex[call_top] = static_cast<std::int8_t>(w);
        frame_arc[call_top] = 0;
        ++call_top;
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    } else {
      if (lowlink[v] == index[v]) {
        // Root of a completed component: strongly connected only if this is
        // the single component containing every vertex.
        if (call_top != 1 || stack_top != v_count) return false;
        return next_index == v_count;
      }
      --call_top;
      const int parent = frame_vertex[call_top - 1];
      lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
    }
  }
  return false;  // unreachable
}

std::uint64_t count_range(int n, std::uint64_t begin, std::uint64_t end) {
  const int entries = 1 << n;
  const std::uint64_t entry_mask = (std::uint64_t{1} << n) - 1;
  std::uint8_t table[16];
  std::uint64_t chaotic = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    for (int e = 0; e < entries; ++e)
      table[e] = static_cast<std::uint8_t>((idx >> (n * e)) & entry_mask);
    if (strongly_connected_small(n, table)) ++chaotic;
  }
  return chaotic;
}

}  // namespace

std::uint64_t function_space_size(int arity) {
  if (arity < 1 || arity > kMaxEnumerationArity)
    throw std::invalid_argument("function_space_size: arity must be in [1, " +
                                std::to_string(kMaxEnumerationArity) + "]");
  // (2^N)^(2^N) = 2^(N * 2^N)
  return std::uint64_t{1} << (arity << arity);
}

UpdateFunction function_from_index(int arity, std::uint64_t index) {
  const std::uint64_t space = function_space_size(arity);
  if (index >= space)
    throw std::out_of_range("function_from_index: index exceeds function space");
  const std::uint32_t entries = std::uint32_t{1} << arity;
  const std::uint64_t entry_mask = entries - 1;
  std::vector<std::uint32_t> table(entries);
  for (std::uint32_t e = 0; e < entries; ++e)
    table[e] = static_cast<std::uint32_t>((index >> (arity * e)) & entry_mask);
  return UpdateFunction(arity, std::move(table));
}

ChaoticCount enumerate_chaotic(
    int arity, unsigned threads,
    const std::function<void(std::uint64_t done, std::uint64_t total)>& progress) {
  const std::uint64_t total = function_space_size(arity);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Deterministic chunking by the leading table entries: 2^N chunks fix
  // entry 2^N-1, which keeps chunk boundaries stable across thread counts.
  const std::uint64_t n_chunks = std::min<std::uint64_t>(total, std::uint64_t{1} << arity);
  const std::uint64_t chunk_size = total / n_chunks;

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> done{0};
  std::atomic<std::uint64_t> chaotic{0};
  std::mutex progress_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= n_chunks) return;
      const std::uint64_t begin = chunk * chunk_size;
      const std::uint64_t end = begin + chunk_size;
      chaotic.fetch_add(count_range(arity, begin, end));
      if (progress) {
        std::lock_guard lock(progress_mutex);  // keeps reported counts monotone
        progress(done.fetch_add(chunk_size) + chunk_size, total);
      } else {
        done.fetch_add(chunk_size);
      }
    }
  };

  std::vector<std::thread> pool;
  const unsigned n_workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));
  pool.reserve(n_workers);
  for (unsigned t = 1; t < n_workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  return ChaoticCount{arity, total, chaotic.load()};
}

}  // namespace cikit
