#ifndef CIKIT_VERIFY_HPP
#define CIKIT_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cikit/iterate.hpp"
#include "cikit/metric.hpp"
#include "cikit/update.hpp"

namespace cikit {

/// One line of a verifier run, rendered as machine-readable key=value pairs:
/// `check=<name> k1=v1 ... result=pass|fail`.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> values;
  bool pass = false;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, std::uint64_t value);
  std::string to_line() const;
};

/// Checks that points at distance < 10^-(k+1) map under one iteration step to
/// points at distance < 10^-k: random pairs share the state and the first
/// k+1 strategy terms; their images must share the state and the first k
/// terms. Violations are counted (none are expected for any f).
struct ContinuityReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
};
ContinuityReport continuity_check(const Update& f, std::uint64_t trials, int depth,
                                  std::uint64_t seed = 1);

/// Bounded-search horizon used when no explicit one is given.
inline int default_search_horizon(int n_cells) { return 4 * n_cells; }

/// Searches for a perturbed companion of `p` that shares its state and first
/// `tail_depth` strategy terms (distance < 10^-tail_depth) yet diverges as
/// far as possible within `horizon` iteration steps; returns the largest
/// distance reached. For vectorial negation the search plans the companion's
/// tail exactly and reaches at least N-1 whenever
/// horizon >= tail_depth + N + 1.
ExactDistance sensitivity_probe(const Update& f, const SystemPoint& p, int tail_depth,
                                int horizon, int precision = 4);

/// Exhaustively verifies, over all pairs of distinct points whose strategies
/// are periodic with period <= period_bound, that some iterate within
/// `horizon` separates the pair by distance >= 1 (states differ). Vectorial
/// negation; desk scale only (N <= 3, period_bound <= 4).
bool expansiveness_check_f0(int n_cells, int period_bound, int horizon);

/// Counts distinct state-orbit segments (x^0..x^(k-1)) of the negation
/// system over every initial state and every unary term tuple, for k =
/// 1..max_len. Desk scale (N <= 3, max_len <= 10). The counts grow as
/// 2^N * N^(k-1).
std::vector<std::uint64_t> entropy_growth(int n_cells, int max_len);

/// Least-squares slope of log(count) against segment length.
double fitted_log_slope(std::span<const std::uint64_t> counts);

// Packaged desk-scale checks, one CheckReport line each. These back both the
// `verify` CLI subcommand and the acceptance suite.

/// Random point pairs and triples (2 <= N <= max_cells): floor(d) equals the
/// state Hamming distance, prefix agreement and first-difference bounds hold
/// for the strategy part, and symmetry plus the triangle inequality hold in
/// exact arithmetic.
CheckReport check_metric_laws(std::uint64_t samples, int max_cells, int precision,
                              std::uint64_t seed);

/// Metric laws over every point of the N=2, L=3 truncated space.
CheckReport check_metric_exhaustive();

/// continuity_check over every update function on 2 cells.
CheckReport check_continuity_all_n2(std::uint64_t trials_per_function, int depth,
                                    std::uint64_t seed);

/// continuity_check over `functions` sampled update functions on 3 cells.
CheckReport check_continuity_sampled_n3(std::uint64_t functions,
                                        std::uint64_t trials_per_function, int depth,
                                        std::uint64_t seed);

/// Random sensitivity probes against the negation system: every probe must
/// diverge to at least N-1.
CheckReport check_sensitivity_f0(int n_cells, std::uint64_t probes, int tail_depth,
                                 int horizon, std::uint64_t seed);

CheckReport check_expansiveness_f0(int n_cells, int period_bound, int horizon);

/// Exact orbit-segment counts 2^N * N^(k-1) and a fitted log-slope within
/// `slope_tolerance` (relative) of ln N.
CheckReport check_entropy_growth(int n_cells, int max_len, double slope_tolerance);

}  // namespace cikit

#endif
