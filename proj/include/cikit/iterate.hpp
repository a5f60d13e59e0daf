#ifndef CIKIT_ITERATE_HPP
#define CIKIT_ITERATE_HPP

#include <cstddef>
#include <vector>

#include "cikit/state_vector.hpp"
#include "cikit/strategy.hpp"
#include "cikit/update.hpp"

namespace cikit {

/// A point of the product space [1,N]^IN x B^N: a unary strategy paired with
/// a state of matching width.
struct SystemPoint {
  SystemPoint(Strategy strategy, StateVector state);

  Strategy strategy;
  StateVector state;
};

/// F_f(i, x): update coordinate i to f(x)_i, leave every other cell alone.
StateVector ff_step(const Update& f, int i, const StateVector& x);

/// One subset iteration step: cells in the subset take f(x)'s values,
/// evaluated at the incoming state; cells outside are unchanged.
StateVector ci_step_subset(const Update& f, const StateVector& x, const StrategyTerm& subset);

/// One step of either kind, dispatching on the term.
StateVector ci_step(const Update& f, const StateVector& x, const StrategyTerm& term);

/// G_f(S, E) = (shift(S), F_f(head(S), E)). Requires a unary strategy with at
/// least one available term; reads nothing beyond the head.
SystemPoint gf_step(const Update& f, const SystemPoint& p);

/// States x^0 .. x^steps of the chaotic iterations driven by the first
/// `steps` terms of the strategy (unary or subset). On exhaustion, throws
/// StrategyExhausted carrying the index reached.
std::vector<StateVector> trajectory(const Update& f, const StateVector& x0, const Strategy& s,
                                    std::size_t steps);

}  // namespace cikit

#endif
