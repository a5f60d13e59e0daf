#include "cikit/strategy.hpp"

#include <limits>
#include <string>
#include <utility>

namespace cikit {

StrategyTerm StrategyTerm::unary(int index) {
  if (index < 1)
    throw std::invalid_argument("StrategyTerm::unary: index must be >= 1, got " +
                                std::to_string(index));
  return StrategyTerm(std::variant<int, StateVector>(std::in_place_index<0>, index));
}

StrategyTerm StrategyTerm::subset(StateVector mask) {
  return StrategyTerm(std::variant<int, StateVector>(std::in_place_index<1>, std::move(mask)));
}

StrategyTerm StrategyTerm::subset_of(int n_cells, std::initializer_list<int> indices) {
  StateVector mask(n_cells);
  for (int i : indices) mask.set(i, true);
  return subset(std::move(mask));
}

int StrategyTerm::unary_index() const {
  if (kind() != TermKind::unary)
    throw std::logic_error("StrategyTerm: not a unary term");
  return std::get<int>(value_);
}

const StateVector& StrategyTerm::subset_mask() const {
  if (kind() != TermKind::subset)
    throw std::logic_error("StrategyTerm: not a subset term");
  return std::get<StateVector>(value_);
}

StrategyTerm StrategyTerm::as_subset(int n_cells) const {
  if (kind() == TermKind::subset) {
    if (subset_mask().size() != n_cells)
      throw std::invalid_argument("StrategyTerm::as_subset: mask length mismatch");
    return *this;
  }
  StateVector mask(n_cells);
  mask.set(unary_index(), true);
  return subset(std::move(mask));
}

StrategyTerm StrategyTerm::as_unary() const {
  if (kind() == TermKind::unary) return *this;
  const auto indices = subset_mask().set_indices();
  if (indices.size() != 1)
    throw std::logic_error("StrategyTerm::as_unary: subset is not a singleton");
  return unary(indices[0]);
}

StrategyExhausted::StrategyExhausted(std::size_t index)
    : std::runtime_error("strategy exhausted at term index " + std::to_string(index)),
      index_(index) {}

struct Strategy::Store {
  mutable std::mutex mutex;
  mutable std::vector<StrategyTerm> terms;
  std::shared_ptr<TermSource> source;  // null for finite strategies
};

Strategy::Strategy(int n_cells, std::vector<StrategyTerm> prefix, TermKind kind)
    : store_(std::make_shared<Store>()), n_cells_(n_cells), kind_(kind) {
  if (n_cells < 1 || n_cells > StateVector::kMaxCells)
    throw std::invalid_argument("Strategy: cell count out of range");
  store_->terms = std::move(prefix);
  for (const auto& t : store_->terms) {
    if (t.kind() != kind_)
      throw std::invalid_argument("Strategy: terms must all be unary or all be subsets");
    validate_term(t);
  }
}

Strategy::Strategy(int n_cells, std::vector<StrategyTerm> prefix,
                   std::shared_ptr<TermSource> source)
    : Strategy(n_cells, std::move(prefix), source ? source->kind() : TermKind::unary) {
  if (!source) throw std::invalid_argument("Strategy: null term source");
  if (source->n_cells() != n_cells)
    throw std::invalid_argument("Strategy: source cell count mismatch");
  store_->source = std::move(source);
}

Strategy::Strategy(std::shared_ptr<Store> store, std::size_t offset, int n_cells, TermKind kind)
    : store_(std::move(store)), offset_(offset), n_cells_(n_cells), kind_(kind) {}

Strategy Strategy::unary_of(int n_cells, std::initializer_list<int> indices) {
  return unary_of(n_cells, std::vector<int>(indices));
}

Strategy Strategy::unary_of(int n_cells, const std::vector<int>& indices) {
  std::vector<StrategyTerm> terms;
  terms.reserve(indices.size());
  for (int i : indices) terms.push_back(StrategyTerm::unary(i));
  return Strategy(n_cells, std::move(terms), TermKind::unary);
}

Strategy Strategy::from_source(std::shared_ptr<TermSource> source) {
  if (!source) throw std::invalid_argument("Strategy::from_source: null source");
  const int n = source->n_cells();
  return Strategy(n, {}, std::move(source));
}

void Strategy::validate_term(const StrategyTerm& t) const {
  if (t.kind() == TermKind::unary) {
    if (t.unary_index() > n_cells_)
      throw std::out_of_range("Strategy: unary index " + std::to_string(t.unary_index()) +
                              " outside [1, " + std::to_string(n_cells_) + "]");
  } else if (t.subset_mask().size() != n_cells_) {
    throw std::invalid_argument("Strategy: subset mask length mismatch");
  }
}

bool Strategy::unbounded() const noexcept { return store_->source != nullptr; }

std::size_t Strategy::available() const noexcept {
  if (unbounded()) return std::numeric_limits<std::size_t>::max();
  std::lock_guard lock(store_->mutex);
  return store_->terms.size() - offset_;
}

StrategyTerm Strategy::term(std::size_t k) const {
  const std::size_t absolute = offset_ + k;
  std::lock_guard lock(store_->mutex);
  while (store_->terms.size() <= absolute) {
    if (!store_->source) throw StrategyExhausted(k);
    StrategyTerm t = store_->source->next();
    if (t.kind() != kind_)
      throw std::logic_error("Strategy: source produced a term of the wrong kind");
    validate_term(t);
    store_->terms.push_back(std::move(t));
  }
  return store_->terms[absolute];
}

Strategy Strategy::shift() const {
  term(0);  // ensure the dropped head exists; throws StrategyExhausted otherwise
  return Strategy(store_, offset_ + 1, n_cells_, kind_);
}

std::vector<StrategyTerm> Strategy::take(std::size_t count) const {
  std::vector<StrategyTerm> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(term(k));
  return out;
}

}  // namespace cikit
