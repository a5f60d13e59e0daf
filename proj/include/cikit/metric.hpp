#ifndef CIKIT_METRIC_HPP
#define CIKIT_METRIC_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "cikit/iterate.hpp"
#include "cikit/state_vector.hpp"
#include "cikit/strategy.hpp"

namespace cikit {

/// Default number of strategy terms compared by the distance; the underlying
/// series is infinite, so the truncation horizon is always explicit.
inline constexpr int kDefaultPrecision = 16;

/// Exact value of the distance d(X, Y) = d_e + d_s truncated to the first L
/// strategy terms. The state part d_e is the integer part; the strategy part
/// d_s is the exact fraction frac_numerator / (N * 10^L), always < 1, so
/// floor(d) = d_e. All arithmetic is integral; nothing is rounded.
struct ExactDistance {
  int n_cells = 0;                    // N
  int precision = kDefaultPrecision;  // L
  std::uint32_t integer_part = 0;     // d_e, <= N
  std::uint64_t frac_numerator = 0;   // < N * 10^L

  std::uint64_t denominator() const;  // N * 10^L

  /// d_s < 10^-k, i.e. the strategies agree on the first k terms (k <= L).
  bool frac_less_than_pow10(int k) const;
  /// d_s >= 9 / (N * 10^k): witnesses a difference at term k (k <= L).
  bool frac_at_least_term_gap(int k) const;

  /// "d_e + num/den" rendering, e.g. "2 + 900/2000".
  std::string to_string() const;

  friend bool operator==(const ExactDistance&, const ExactDistance&) = default;
  /// Ordering of distances sharing N and L.
  std::strong_ordering operator<=>(const ExactDistance& other) const;
};

/// 10^k as uint64; k <= 19.
std::uint64_t pow10_u64(int k);

/// Numerator of the truncated strategy distance over denominator N * 10^L:
/// sum over k = 1..L of 9 * |S^k - T^k| * 10^(L-k). Requires unary
/// strategies over the same N with at least L available terms, and N * 10^L
/// to fit in 64 bits.
std::uint64_t strategy_distance(const Strategy& s, const Strategy& t, int precision);

/// The full distance on system points: Hamming of states plus the truncated
/// strategy distance.
ExactDistance distance(const SystemPoint& x, const SystemPoint& y,
                       int precision = kDefaultPrecision);

}  // namespace cikit

#endif
