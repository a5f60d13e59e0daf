#include "cikit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace cikit {

namespace {

StateVector random_state(int n, std::mt19937_64& rng) {
  StateVector x(n);
  std::bernoulli_distribution bit;
  for (int i = 1; i <= n; ++i) x.set(i, bit(rng));
  return x;
}

std::vector<int> random_indices(int n, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n);
  std::vector<int> out(count);
  for (auto& v : out) v = idx(rng);
  return out;
}

// Tail plan for the negation system: choose the companion's free terms so
// that the accumulated flip masks of the two orbits differ in at least N-1
// cells at the horizon. Returns the planned indices for steps
// tail_depth+1 .. horizon, or empty when the horizon is too short.
std::vector<int> plan_negation_tail(const SystemPoint& p, int tail_depth, int horizon) {
  const int n = p.state.size();
  StateVector accumulated(n);  // xor of p's flips after the shared prefix
  for (int step = tail_depth; step < horizon; ++step)
    accumulated.flip(p.strategy.term(step).unary_index());

  StateVector target = accumulated.complemented();  // flips we want for the companion
  const int free_terms = horizon - tail_depth;
  int weight = target.count_ones();
  if ((free_terms - weight) % 2 != 0) {
    // Fix parity: drop one needed flip (or add a spurious one when none).
    target.flip(target.any() ? target.set_indices().front() : 1);
    weight = target.count_ones();
  }
  if (weight > free_terms) return {};

  std::vector<int> tail = target.set_indices();
  while (static_cast<int>(tail.size()) < free_terms) {  // pad with self-cancelling pairs
    tail.push_back(1);
    tail.push_back(1);
  }
  return tail;
}

// One-step-lookahead companion for arbitrary update functions: each step
// picks the term that maximizes the next Hamming gap.
std::vector<int> greedy_tail(const Update& f, const SystemPoint& p, int tail_depth,
                             int horizon) {
  const int n = p.state.size();
  StateVector x = p.state;
  StateVector y = p.state;
  for (int step = 0; step < tail_depth; ++step) {
    x = ff_step(f, p.strategy.term(step).unary_index(), x);
    y = ff_step(f, p.strategy.term(step).unary_index(), y);
  }
  std::vector<int> tail;
  tail.reserve(static_cast<std::size_t>(horizon - tail_depth));
  for (int step = tail_depth; step < horizon; ++step) {
    x = ff_step(f, p.strategy.term(step).unary_index(), x);
    int best_i = 1;
    int best_gap = -1;
    for (int i = 1; i <= n; ++i) {
      const int gap = hamming(x, ff_step(f, i, y));
      if (gap > best_gap) {
        best_gap = gap;
        best_i = i;
      }
    }
    y = ff_step(f, best_i, y);
    tail.push_back(best_i);
  }
  return tail;
}

}  // namespace

void CheckReport::add(const std::string& key, const std::string& value) {
  values.emplace_back(key, value);
}

void CheckReport::add(const std::string& key, std::uint64_t value) {
  values.emplace_back(key, std::to_string(value));
}

std::string CheckReport::to_line() const {
  std::string line = "check=" + name;
  for (const auto& [key, value] : values) line += " " + key + "=" + value;
  line += " result=";
  line += pass ? "pass" : "fail";
  return line;
}

ContinuityReport continuity_check(const Update& f, std::uint64_t trials, int depth,
                                  std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("continuity_check: depth must be >= 1");
  const int n = f.arity();
  const int probe_precision = depth + 2;
  // Shared prefix of depth+1 terms, then enough independent tail for the
  // post-step distance at the probe precision.
  const std::size_t term_count = static_cast<std::size_t>(depth) + 1 + probe_precision;

  std::mt19937_64 rng(seed);
  ContinuityReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const StateVector state = random_state(n, rng);
    std::vector<int> sa = random_indices(n, term_count, rng);
    std::vector<int> sb = sa;
    for (std::size_t k = static_cast<std::size_t>(depth) + 1; k < term_count; ++k)
      sb[k] = random_indices(n, 1, rng)[0];

    const SystemPoint px(Strategy::unary_of(n, sa), state);
    const SystemPoint py(Strategy::unary_of(n, sb), state);
    const SystemPoint ix = gf_step(f, px);
    const SystemPoint iy = gf_step(f, py);

    bool ok = ix.state == iy.state;
    for (int k = 0; ok && k < depth; ++k)
      ok = ix.strategy.term(static_cast<std::size_t>(k)) ==
           iy.strategy.term(static_cast<std::size_t>(k));
    if (ok) {
      const ExactDistance d = distance(ix, iy, probe_precision);
      ok = d.integer_part == 0 && d.frac_less_than_pow10(depth);
    }
    ++report.trials;
    if (!ok) ++report.violations;
  }
  return report;
}

ExactDistance sensitivity_probe(const Update& f, const SystemPoint& p, int tail_depth,
                                int horizon, int precision) {
  if (tail_depth < 0 || horizon < tail_depth)
    throw std::invalid_argument("sensitivity_probe: need 0 <= tail_depth <= horizon");
  const int n = p.state.size();
  if (f.arity() != n) throw std::invalid_argument("sensitivity_probe: arity mismatch");

  // The probe consumes horizon steps and still needs `precision` lookahead
  // terms for the final distance; surface exhaustion up front.
  p.strategy.term(static_cast<std::size_t>(horizon) + precision - 1);

  std::vector<int> tail;
  if (is_negation(f)) tail = plan_negation_tail(p, tail_depth, horizon);
  if (tail.empty()) tail = greedy_tail(f, p, tail_depth, horizon);

  // Companion point: p's first tail_depth terms, the planned tail, then p's
  // own terms again so the post-horizon comparison window is identical.
  std::vector<int> companion_terms;
  companion_terms.reserve(static_cast<std::size_t>(horizon) + precision);
  for (int k = 0; k < tail_depth; ++k)
    companion_terms.push_back(p.strategy.term(k).unary_index());
  companion_terms.insert(companion_terms.end(), tail.begin(), tail.end());
  for (int k = horizon; k < horizon + precision; ++k)
    companion_terms.push_back(p.strategy.term(k).unary_index());

  SystemPoint current_p = p;
  SystemPoint current_q(Strategy::unary_of(n, companion_terms), p.state);
  ExactDistance best = distance(current_p, current_q, precision);
  for (int m = 1; m <= horizon; ++m) {
    current_p = gf_step(f, current_p);
    current_q = gf_step(f, current_q);
    best = std::max(best, distance(current_p, current_q, precision));
  }
  return best;
}

bool expansiveness_check_f0(int n_cells, int period_bound, int horizon) {
  if (n_cells < 1 || n_cells > 3 || period_bound < 1 || period_bound > 4)
    throw std::invalid_argument(
        "expansiveness_check_f0: exhaustive scan limited to N <= 3, periods <= 4");

  // All periodic unary strategies with period <= bound, each sequence once
  // (patterns reducible to a shorter period are skipped).
  std::vector<std::vector<int>> patterns;
  for (int period = 1; period <= period_bound; ++period) {
    std::vector<int> pattern(period, 1);
    for (;;) {
      bool minimal = true;
      for (int d = 1; d < period && minimal; ++d) {
        if (period % d != 0) continue;
        minimal = false;
        for (int k = 0; k < period; ++k)
          if (pattern[k] != pattern[k % d]) {
            minimal = true;
            break;
          }
      }
      if (minimal) patterns.push_back(pattern);
      int pos = period - 1;
      while (pos >= 0 && pattern[pos] == n_cells) pattern[pos--] = 1;
      if (pos < 0) break;
      ++pattern[pos];
    }
  }

  const std::uint32_t states = std::uint32_t{1} << n_cells;
  struct Point {
    std::size_t pattern;
    std::uint32_t state;
  };
  std::vector<Point> points;
  for (std::size_t s = 0; s < patterns.size(); ++s)
    for (std::uint32_t e = 0; e < states; ++e) points.push_back({s, e});

  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      std::uint32_t x = points[a].state;
      std::uint32_t y = points[b].state;
      const auto& sa = patterns[points[a].pattern];
      const auto& sb = patterns[points[b].pattern];
      bool separated = x != y;
      for (int m = 1; !separated && m <= horizon; ++m) {
        x ^= std::uint32_t{1} << (sa[(m - 1) % sa.size()] - 1);  // negation flips the cell
        y ^= std::uint32_t{1} << (sb[(m - 1) % sb.size()] - 1);
        separated = x != y;
      }
      if (!separated) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> entropy_growth(int n_cells, int max_len) {
  if (n_cells < 1 || n_cells > 3 || max_len < 1 || max_len > 10)
    throw std::invalid_argument("entropy_growth: exhaustive scan limited to N <= 3, k <= 10");
  const std::uint32_t states = std::uint32_t{1} << n_cells;
  std::vector<std::uint64_t> counts;

  for (int len = 1; len <= max_len; ++len) {
    std::unordered_set<std::uint64_t> segments;
    const int steps = len - 1;
    std::vector<int> terms(static_cast<std::size_t>(std::max(steps, 0)), 1);
    for (;;) {
      for (std::uint32_t x0 = 0; x0 < states; ++x0) {
        std::uint64_t key = x0;
        std::uint32_t x = x0;
        for (int t = 0; t < steps; ++t) {
          x ^= std::uint32_t{1} << (terms[t] - 1);
          key = (key << n_cells) | x;
        }
        segments.insert(key);
      }
      int pos = steps - 1;
      while (pos >= 0 && terms[pos] == n_cells) terms[pos--] = 1;
      if (pos < 0) break;
      ++terms[pos];
    }
    counts.push_back(segments.size());
  }
  return counts;
}

double fitted_log_slope(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2)
    throw std::invalid_argument("fitted_log_slope: need at least two counts");
  const double m = static_cast<double>(counts.size());
  double sum_k = 0, sum_y = 0, sum_kk = 0, sum_ky = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const double y = std::log(static_cast<double>(counts[i]));
    sum_k += k;
    sum_y += y;
    sum_kk += k * k;
    sum_ky += k * y;
  }
  return (m * sum_ky - sum_k * sum_y) / (m * sum_kk - sum_k * sum_k);
}

namespace {

// Exact total numerator of d over the common denominator N*10^L.
__int128 distance_total(const ExactDistance& d) {
  return static_cast<__int128>(d.integer_part) * d.denominator() + d.frac_numerator;
}

UpdateFunction random_table(int n, std::mt19937_64& rng) {
  const std::uint32_t states = std::uint32_t{1} << n;
  std::vector<std::uint32_t> table(states);
  for (auto& e : table) e = static_cast<std::uint32_t>(rng() % states);
  return UpdateFunction(n, std::move(table));
}

}  // namespace

CheckReport check_metric_laws(std::uint64_t samples, int max_cells, int precision,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t violations = 0;
  const std::size_t term_count = static_cast<std::size_t>(precision) + 2;

  for (std::uint64_t trial = 0; trial < samples; ++trial) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_cells - 1));
    const int agree = static_cast<int>(rng() % static_cast<unsigned>(precision));

    std::vector<int> sa(term_count), sb(term_count), sc(term_count);
    for (std::size_t k = 0; k < term_count; ++k) {
      sa[k] = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      sb[k] = static_cast<int>(k) < agree ? sa[k]
                                          : 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      sc[k] = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    }
    sb[static_cast<std::size_t>(agree)] = 1 + (sa[static_cast<std::size_t>(agree)] % n);

    const SystemPoint x(Strategy::unary_of(n, sa), random_state(n, rng));
    const SystemPoint y(Strategy::unary_of(n, sb), random_state(n, rng));
    const SystemPoint z(Strategy::unary_of(n, sc), random_state(n, rng));

    const auto dxy = distance(x, y, precision);
    const auto dyx = distance(y, x, precision);
    const auto dxz = distance(x, z, precision);
    const auto dyz = distance(y, z, precision);

    bool ok = dxy == dyx;                               // symmetry
    ok = ok && dxy.frac_numerator < dxy.denominator();  // d_s < 1
    ok = ok && dxy.integer_part ==
                   static_cast<std::uint32_t>(hamming(x.state, y.state));  // floor law
    ok = ok && dxy.frac_less_than_pow10(agree);           // shared prefix bound
    ok = ok && dxy.frac_at_least_term_gap(agree + 1);     // first-difference bound
    ok = ok && distance_total(dxz) <= distance_total(dxy) + distance_total(dyz);
    if (!ok) ++violations;
  }

  CheckReport report;
  report.name = "metric_laws";
  report.add("samples", samples);
  report.add("max_n", static_cast<std::uint64_t>(max_cells));
  report.add("L", static_cast<std::uint64_t>(precision));
  report.add("violations", violations);
  report.pass = violations == 0;
  return report;
}

CheckReport check_metric_exhaustive() {
  const int n = 2;
  const int precision = 3;
  std::vector<SystemPoint> points;
  for (std::uint32_t e = 0; e < 4; ++e)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          points.emplace_back(Strategy::unary_of(n, {a, b, c}),
                              StateVector::from_encoding(n, e));

  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      const auto dij = distance(points[i], points[j], precision);
      if (!(dij == distance(points[j], points[i], precision))) ++violations;
      if ((distance_total(dij) == 0) != (i == j)) ++violations;
      for (std::size_t k = 0; k < points.size(); ++k)
        if (distance_total(distance(points[i], points[k], precision)) >
            distance_total(dij) + distance_total(distance(points[j], points[k], precision)))
          ++violations;
    }

  CheckReport report;
  report.name = "metric_exhaustive";
  report.add("N", std::uint64_t{2});
  report.add("L", std::uint64_t{3});
  report.add("points", static_cast<std::uint64_t>(points.size()));
  report.add("violations", violations);
  report.pass = violations == 0;
  return report;
}

CheckReport check_continuity_all_n2(std::uint64_t trials_per_function, int depth,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t violations = 0;
  for (std::uint32_t idx = 0; idx < 256; ++idx) {
    std::vector<std::uint32_t> table(4);
    for (int e = 0; e < 4; ++e) table[static_cast<std::size_t>(e)] = (idx >> (2 * e)) & 3u;
    violations +=
        continuity_check(UpdateFunction(2, std::move(table)), trials_per_function, depth, rng())
            .violations;
  }
  CheckReport report;
  report.name = "continuity_n2_all_functions";
  report.add("functions", std::uint64_t{256});
  report.add("trials_each", trials_per_function);
  report.add("depth", static_cast<std::uint64_t>(depth));
  report.add("violations", violations);
  report.pass = violations == 0;
  return report;
}

CheckReport check_continuity_sampled_n3(std::uint64_t functions,
                                        std::uint64_t trials_per_function, int depth,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t violations = 0;
  for (std::uint64_t s = 0; s < functions; ++s)
    violations +=
        continuity_check(random_table(3, rng), trials_per_function, depth, rng()).violations;
  CheckReport report;
  report.name = "continuity_n3_sampled";
  report.add("functions", functions);
  report.add("trials_each", trials_per_function);
  report.add("depth", static_cast<std::uint64_t>(depth));
  report.add("violations", violations);
  report.pass = violations == 0;
  return report;
}

CheckReport check_sensitivity_f0(int n_cells, std::uint64_t probes, int tail_depth,
                                 int horizon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Negation f0(n_cells);
  const int precision = 4;
  std::uint64_t reached = 0;
  std::uint32_t worst = 0xFFFFFFFFu;
  for (std::uint64_t probe = 0; probe < probes; ++probe) {
    std::vector<int> terms(static_cast<std::size_t>(horizon + precision));
    for (auto& t : terms) t = 1 + static_cast<int>(rng() % static_cast<unsigned>(n_cells));
    const SystemPoint p(Strategy::unary_of(n_cells, terms), random_state(n_cells, rng));
    const auto best = sensitivity_probe(f0, p, tail_depth, horizon, precision);
    if (best.integer_part >= static_cast<std::uint32_t>(n_cells - 1)) ++reached;
    worst = std::min(worst, best.integer_part);
  }
  CheckReport report;
  report.name = "sensitivity_f0";
  report.add("N", static_cast<std::uint64_t>(n_cells));
  report.add("probes", probes);
  report.add("k", static_cast<std::uint64_t>(tail_depth));
  report.add("H", static_cast<std::uint64_t>(horizon));
  report.add("min_divergence", static_cast<std::uint64_t>(worst));
  report.pass = reached == probes;
  return report;
}

CheckReport check_expansiveness_f0(int n_cells, int period_bound, int horizon) {
  const bool pass = expansiveness_check_f0(n_cells, period_bound, horizon);
  CheckReport report;
  report.name = "expansiveness_f0";
  report.add("N", static_cast<std::uint64_t>(n_cells));
  report.add("P", static_cast<std::uint64_t>(period_bound));
  report.add("H", static_cast<std::uint64_t>(horizon));
  report.pass = pass;
  return report;
}

CheckReport check_entropy_growth(int n_cells, int max_len, double slope_tolerance) {
  const auto counts = entropy_growth(n_cells, max_len);
  bool exact = true;
  std::uint64_t expected = std::uint64_t{1} << n_cells;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != expected) exact = false;
    expected *= static_cast<std::uint64_t>(n_cells);
  }
  const double slope = fitted_log_slope(counts);
  const double target = std::log(static_cast<double>(n_cells));
  const bool slope_ok = std::abs(slope - target) <= slope_tolerance * target;

  CheckReport report;
  report.name = "entropy_growth";
  report.add("N", static_cast<std::uint64_t>(n_cells));
  report.add("k_max", static_cast<std::uint64_t>(max_len));
  report.add("exact_counts", exact ? "yes" : "no");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", slope);
  report.add("slope", std::string(buf));
  std::snprintf(buf, sizeof buf, "%.6f", target);
  report.add("ln_n", std::string(buf));
  report.pass = exact && slope_ok;
  return report;
}

}  // namespace cikit
