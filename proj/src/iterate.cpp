#include "cikit/iterate.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cikit {

SystemPoint::SystemPoint(Strategy strategy_, StateVector state_)
    : strategy(std::move(strategy_)), state(std::move(state_)) {
  if (strategy.n_cells() != state.size())
    throw std::invalid_argument("SystemPoint: strategy is over " +
                                std::to_string(strategy.n_cells()) + " cells but state has " +
                                std::to_string(state.size()));
  if (strategy.kind() != TermKind::unary)
    throw std::invalid_argument("SystemPoint: strategy must be unary");
}

StateVector ff_step(const Update& f, int i, const StateVector& x) {
  if (x.size() != f.arity())
    throw std::invalid_argument("ff_step: state length " + std::to_string(x.size()) +
                                " does not match arity " + std::to_string(f.arity()));
  if (i < 1 || i > f.arity())
    throw std::out_of_range("ff_step: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(f.arity()) + "]");
  StateVector y = x;
  y.set(i, f.image_bit(x, i));
  return y;
}

StateVector ci_step_subset(const Update& f, const StateVector& x, const StrategyTerm& subset) {
  if (x.size() != f.arity())
    throw std::invalid_argument("ci_step_subset: state length does not match arity");
  const StateVector& mask = subset.subset_mask();
  if (mask.size() != x.size())
    throw std::invalid_argument("ci_step_subset: subset is over " + std::to_string(mask.size()) +
                                " cells, state has " + std::to_string(x.size()));
  if (!mask.any()) return x;
  StateVector y = x;
  if (mask.count_ones() == x.size()) {
    y = f.image(x);  // full update
  } else {
    for (int i : mask.set_indices()) y.set(i, f.image_bit(x, i));
  }
  return y;
}

StateVector ci_step(const Update& f, const StateVector& x, const StrategyTerm& term) {
  if (term.kind() == TermKind::unary) return ff_step(f, term.unary_index(), x);
  return ci_step_subset(f, x, term);
}

SystemPoint gf_step(const Update& f, const SystemPoint& p) {
  const int i = p.strategy.head().unary_index();
  return SystemPoint(p.strategy.shift(), ff_step(f, i, p.state));
}

std::vector<StateVector> trajectory(const Update& f, const StateVector& x0, const Strategy& s,
                                    std::size_t steps) {
  if (x0.size() != f.arity())
    throw std::invalid_argument("trajectory: initial state length does not match arity");
  if (s.n_cells() != x0.size())
    throw std::invalid_argument("trajectory: strategy cell count does not match state");
  std::vector<StateVector> states;
  states.reserve(steps + 1);
  states.push_back(x0);
  for (std::size_t t = 0; t < steps; ++t)
    states.push_back(ci_step(f, states.back(), s.term(t)));
  return states;
}

}  // namespace cikit
