#include "cikit/metric.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace cikit {

namespace {

void check_scale(int n_cells, int precision) {
  if (precision < 1 || precision > 19)
    throw std::invalid_argument("distance precision must be in [1, 19], got " +
                                std::to_string(precision));
  const std::uint64_t p = pow10_u64(precision);
  if (static_cast<std::uint64_t>(n_cells) > std::numeric_limits<std::uint64_t>::max() / p)
    throw std::invalid_argument("distance denominator N*10^L does not fit 64 bits (N=" +
                                std::to_string(n_cells) + ", L=" + std::to_string(precision) +
                                ")");
}

}  // namespace

std::uint64_t pow10_u64(int k) {
  if (k < 0 || k > 19) throw std::invalid_argument("pow10_u64: exponent out of range");
  std::uint64_t r = 1;
  while (k-- > 0) r *= 10;
  return r;
}

std::uint64_t ExactDistance::denominator() const {
  return static_cast<std::uint64_t>(n_cells) * pow10_u64(precision);
}

bool ExactDistance::frac_less_than_pow10(int k) const {
  if (k < 0 || k > precision)
    throw std::invalid_argument("frac_less_than_pow10: k must be in [0, L]");
  // num / (N*10^L) < 10^-k  <=>  num < N * 10^(L-k)
  return frac_numerator < static_cast<std::uint64_t>(n_cells) * pow10_u64(precision - k);
}

bool ExactDistance::frac_at_least_term_gap(int k) const {
  if (k < 1 || k > precision)
    throw std::invalid_argument("frac_at_least_term_gap: k must be in [1, L]");
  // num / (N*10^L) >= 9 / (N*10^k)  <=>  num >= 9 * 10^(L-k)
  return frac_numerator >= 9 * pow10_u64(precision - k);
}

std::string ExactDistance::to_string() const {
  return std::to_string(integer_part) + " + " + std::to_string(frac_numerator) + "/" +
         std::to_string(denominator());
}

std::strong_ordering ExactDistance::operator<=>(const ExactDistance& other) const {
  if (n_cells != other.n_cells || precision != other.precision)
    throw std::invalid_argument("ExactDistance: comparing distances of different scale");
  if (auto c = integer_part <=> other.integer_part; c != 0) return c;
  return frac_numerator <=> other.frac_numerator;
}

std::uint64_t strategy_distance(const Strategy& s, const Strategy& t, int precision) {
  if (s.n_cells() != t.n_cells())
    throw std::invalid_argument("strategy_distance: cell count mismatch");
  if (s.kind() != TermKind::unary || t.kind() != TermKind::unary)
    throw std::invalid_argument("strategy_distance: both strategies must be unary");
  check_scale(s.n_cells(), precision);
  std::uint64_t numerator = 0;
  std::uint64_t weight = pow10_u64(precision - 1);  // 10^(L-k) for k = 1
  for (int k = 0; k < precision; ++k, weight /= 10) {
    const int gap = std::abs(s.term(k).unary_index() - t.term(k).unary_index());
    numerator += 9 * static_cast<std::uint64_t>(gap) * weight;
  }
  return numerator;
}

ExactDistance distance(const SystemPoint& x, const SystemPoint& y, int precision) {
  if (x.state.size() != y.state.size())
    throw std::invalid_argument("distance: points have different cell counts");
  ExactDistance d;
  d.n_cells = x.state.size();
  d.precision = precision;
  d.integer_part = static_cast<std::uint32_t>(hamming(x.state, y.state));
  d.frac_numerator = strategy_distance(x.strategy, y.strategy, precision);
  return d;
}

}  // namespace cikit
