#ifndef CIKIT_STATE_VECTOR_HPP
#define CIKIT_STATE_VECTOR_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cikit {

/// Fixed-length vector of Boolean cells, 1-indexed: cell i is x_i.
///
/// Canonical integer encoding: cell 1 is the least-significant bit.
/// Hex rendering is the canonical encoding written big-endian
/// (most-significant nibble first, ceil(n/4) lowercase digits), so for a
/// byte-aligned width the last hex byte holds cells 1..8.
///
/// The same type doubles as the indicator mask of a subset of [1,n]
/// (cell i set <=> i in the subset).
class StateVector {
 public:
  static constexpr int kMaxCells = 4096;

  /// All cells zero.
  explicit StateVector(int n_cells);

  /// n_cells <= 64; bit b of `encoding` becomes cell b+1.
  static StateVector from_encoding(int n_cells, std::uint64_t encoding);
  /// Bytes in big-endian order, exactly ceil(n/8) of them; unused high bits
  /// of the first byte must be zero.
  static StateVector from_bytes_be(int n_cells, std::span<const std::uint8_t> bytes);
  /// 1..ceil(n/4) hex digits, big-endian, any case; value must fit n cells.
  static StateVector from_hex(int n_cells, std::string_view hex);

  int size() const noexcept { return n_cells_; }

  bool get(int i) const;        // i in [1, n]
  void set(int i, bool value);  // i in [1, n]
  void flip(int i);             // i in [1, n]

  /// Number of set cells (the subset size when used as a mask).
  int count_ones() const noexcept;
  bool any() const noexcept { return count_ones() != 0; }

  StateVector complemented() const;
  void xor_with(const StateVector& other);  // same length required

  /// Canonical integer encoding; requires n_cells <= 64.
  std::uint64_t encoding() const;
  std::vector<std::uint8_t> to_bytes_be() const;
  std::string to_hex() const;

  /// Indices of set cells, ascending (subset view of the mask).
  std::vector<int> set_indices() const;

  bool operator==(const StateVector& other) const noexcept = default;
  std::strong_ordering operator<=>(const StateVector& other) const noexcept;

 private:
  void check_index(int i) const;
  void clear_tail() noexcept;  // zero the unused bits of the last word

  int n_cells_ = 0;
  std::vector<std::uint64_t> words_;  // cell i at word (i-1)/64, bit (i-1)%64
};

/// Count of differing cells (the metric d_e); lengths must match.
int hamming(const StateVector& a, const StateVector& b);

}  // namespace cikit

#endif
