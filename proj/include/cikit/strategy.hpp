#ifndef CIKIT_STRATEGY_HPP
#define CIKIT_STRATEGY_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cikit/state_vector.hpp"

namespace cikit {

enum class TermKind { unary, subset };

/// One update directive: either a single cell index in [1, N] or a subset of
/// [1, N] held as an indicator mask (possibly empty).
class StrategyTerm {
 public:
  static StrategyTerm unary(int index);
  static StrategyTerm subset(StateVector mask);
  /// Convenience: indicator mask over [1, n_cells] from explicit indices.
  static StrategyTerm subset_of(int n_cells, std::initializer_list<int> indices);

  TermKind kind() const noexcept {
    return std::holds_alternative<int>(value_) ? TermKind::unary : TermKind::subset;
  }
  int unary_index() const;
  const StateVector& subset_mask() const;

  /// Unary(i) <-> Subset({i}) conversions.
  StrategyTerm as_subset(int n_cells) const;
  StrategyTerm as_unary() const;  // requires a singleton subset

  bool operator==(const StrategyTerm& other) const = default;

 private:
  explicit StrategyTerm(std::variant<int, StateVector> v) : value_(std::move(v)) {}
  std::variant<int, StateVector> value_;
};

/// Raised when an operation consumes more terms than a strategy can supply.
class StrategyExhausted : public std::runtime_error {
 public:
  explicit StrategyExhausted(std::size_t index);
  /// 0-based index of the first term that could not be supplied.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Unbounded supplier of terms, consumed in order (PRNG- or stream-driven).
class TermSource {
 public:
  virtual ~TermSource() = default;
  virtual int n_cells() const noexcept = 0;
  virtual TermKind kind() const noexcept = 0;
  /// Produce the next term; called once per position, in increasing order.
  virtual StrategyTerm next() = 0;
};

/// A sequence of update directives. Immutable value: shift() returns a new
/// strategy sharing the underlying term cache, so shifting is cheap and the
/// original remains usable. Terms are homogeneous (all unary or all subset).
class Strategy {
 public:
  /// Finite strategy from an explicit prefix. `kind` disambiguates an empty
  /// prefix; non-empty prefixes must match it.
  Strategy(int n_cells, std::vector<StrategyTerm> prefix, TermKind kind = TermKind::unary);

  /// Unbounded strategy: `prefix` first, then terms pulled from `source`.
  Strategy(int n_cells, std::vector<StrategyTerm> prefix, std::shared_ptr<TermSource> source);

  static Strategy unary_of(int n_cells, std::initializer_list<int> indices);
  static Strategy unary_of(int n_cells, const std::vector<int>& indices);
  static Strategy from_source(std::shared_ptr<TermSource> source);

  int n_cells() const noexcept { return n_cells_; }
  TermKind kind() const noexcept { return kind_; }
  bool unbounded() const noexcept;

  /// Terms still available; SIZE_MAX when a source backs the strategy.
  std::size_t available() const noexcept;

  /// First available term, not consumed. Throws StrategyExhausted when empty.
  StrategyTerm head() const { return term(0); }

  /// k-th term from the current position (0-based). Generates from the
  /// source on demand; generated terms are cached and shared across copies.
  StrategyTerm term(std::size_t k) const;

  /// This strategy with its first term removed; *this is unmodified.
  Strategy shift() const;

  /// The first `count` terms, in order.
  std::vector<StrategyTerm> take(std::size_t count) const;

 private:
  struct Store;  // cached terms + optional source, shared between shifts

  Strategy(std::shared_ptr<Store> store, std::size_t offset, int n_cells, TermKind kind);
  void validate_term(const StrategyTerm& t) const;

  std::shared_ptr<Store> store_;
  std::size_t offset_ = 0;
  int n_cells_;
  TermKind kind_;
};

}  // namespace cikit

#endif
