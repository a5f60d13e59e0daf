#include "cikit/state_vector.hpp"

#include <bit>
#include <stdexcept>

namespace cikit {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

StateVector::StateVector(int n_cells) : n_cells_(n_cells) {
  if (n_cells < 1 || n_cells > kMaxCells)
    throw std::invalid_argument("StateVector: cell count must be in [1, " +
                                std::to_string(kMaxCells) + "], got " + std::to_string(n_cells));
  words_.assign((static_cast<std::size_t>(n_cells) + 63) / 64, 0);
}

StateVector StateVector::from_encoding(int n_cells, std::uint64_t encoding) {
  StateVector v(n_cells);
  if (n_cells > 64) throw std::invalid_argument("StateVector::from_encoding: n_cells > 64");
  if (n_cells < 64 && (encoding >> n_cells) != 0)
    throw std::invalid_argument("StateVector::from_encoding: value does not fit " +
                                std::to_string(n_cells) + " cells");
  v.words_[0] = encoding;
  return v;
}

StateVector StateVector::from_bytes_be(int n_cells, std::span<const std::uint8_t> bytes) {
  StateVector v(n_cells);
  const std::size_t want = (static_cast<std::size_t>(n_cells) + 7) / 8;
  if (bytes.size() != want)
    throw std::invalid_argument("StateVector::from_bytes_be: expected " + std::to_string(want) +
                                " bytes, got " + std::to_string(bytes.size()));
  for (std::size_t k = 0; k < want; ++k) {
    const std::uint8_t byte = bytes[want - 1 - k];  // last byte holds cells 1..8
    v.words_[k / 8] |= static_cast<std::uint64_t>(byte) << (8 * (k % 8));
  }
  const int spare = static_cast<int>(want * 8) - n_cells;
  if (spare > 0 && (bytes[0] >> (8 - spare)) != 0)
    throw std::invalid_argument("StateVector::from_bytes_be: set bits beyond cell " +
                                std::to_string(n_cells));
  return v;
}

StateVector StateVector::from_hex(int n_cells, std::string_view hex) {
  StateVector v(n_cells);
  const std::size_t max_digits = (static_cast<std::size_t>(n_cells) + 3) / 4;
  if (hex.empty() || hex.size() > max_digits)
    throw std::invalid_argument("StateVector::from_hex: need 1.." + std::to_string(max_digits) +
                                " hex digits for " + std::to_string(n_cells) + " cells");
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const int d = hex_digit(hex[hex.size() - 1 - k]);
    if (d < 0) throw std::invalid_argument("StateVector::from_hex: invalid hex digit");
    v.words_[k / 16] |= static_cast<std::uint64_t>(d) << (4 * (k % 16));
  }
  // Reject digits that set cells beyond n.
  StateVector check = v;
  check.clear_tail();
  if (check.words_ != v.words_)
    throw std::invalid_argument("StateVector::from_hex: value does not fit " +
                                std::to_string(n_cells) + " cells");
  return v;
}

void StateVector::check_index(int i) const {
  if (i < 1 || i > n_cells_)
    throw std::out_of_range("StateVector: cell index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n_cells_) + "]");
}

bool StateVector::get(int i) const {
  check_index(i);
  return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1u;
}

void StateVector::set(int i, bool value) {
  check_index(i);
  const std::uint64_t bit = std::uint64_t{1} << ((i - 1) % 64);
  if (value)
    words_[(i - 1) / 64] |= bit;
  else
    words_[(i - 1) / 64] &= ~bit;
}

void StateVector::flip(int i) {
  check_index(i);
  words_[(i - 1) / 64] ^= std::uint64_t{1} << ((i - 1) % 64);
}

int StateVector::count_ones() const noexcept {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

StateVector StateVector::complemented() const {
  StateVector v = *this;
  for (std::uint64_t& w : v.words_) w = ~w;
  v.clear_tail();
  return v;
}

void StateVector::xor_with(const StateVector& other) {
  if (other.n_cells_ != n_cells_)
    throw std::invalid_argument("StateVector::xor_with: length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
}

std::uint64_t StateVector::encoding() const {
  if (n_cells_ > 64) throw std::logic_error("StateVector::encoding: n_cells > 64");
  return words_[0];
}

std::vector<std::uint8_t> StateVector::to_bytes_be() const {
  const std::size_t n_bytes = (static_cast<std::size_t>(n_cells_) + 7) / 8;
  std::vector<std::uint8_t> out(n_bytes);
  for (std::size_t k = 0; k < n_bytes; ++k)
    out[n_bytes - 1 - k] = static_cast<std::uint8_t>(words_[k / 8] >> (8 * (k % 8)));
  return out;
}

std::string StateVector::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const std::size_t n_digits = (static_cast<std::size_t>(n_cells_) + 3) / 4;
  std::string out(n_digits, '0');
  for (std::size_t k = 0; k < n_digits; ++k)
    out[n_digits - 1 - k] = digits[(words_[k / 16] >> (4 * (k % 16))) & 0xF];
  return out;
}

std::vector<int> StateVector::set_indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count_ones()));
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<int>(64 * k) + b + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::strong_ordering StateVector::operator<=>(const StateVector& other) const noexcept {
  if (auto c = n_cells_ <=> other.n_cells_; c != 0) return c;
  for (std::size_t k = words_.size(); k-- > 0;)
    if (auto c = words_[k] <=> other.words_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

void StateVector::clear_tail() noexcept {
  const int used = n_cells_ % 64;
  if (used != 0) words_.back() &= (~std::uint64_t{0}) >> (64 - used);
}

int hamming(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  StateVector d = a;
  d.xor_with(b);
  return d.count_ones();
}

}  // namespace cikit
