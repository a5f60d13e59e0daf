#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cikit/verify.hpp"

using namespace cikit;

namespace {

StateVector sv(int n, std::uint64_t enc) { return StateVector::from_encoding(n, enc); }

Strategy random_unary(int n, std::size_t len, std::mt19937_64& rng) {
  std::vector<int> terms(len);
  for (auto& t : terms) t = 1 + static_cast<int>(rng() % n);
  return Strategy::unary_of(n, terms);
}

}  // namespace

TEST_CASE("check reports render as key=value lines") {
  CheckReport report;
  report.name = "expansiveness";
  report.add("N", std::uint64_t{2});
  report.add("P", std::uint64_t{3});
  report.add("H", std::uint64_t{6});
  report.pass = true;
  CHECK(report.to_line() == "check=expansiveness N=2 P=3 H=6 result=pass");
  report.pass = false;
  CHECK(report.to_line() == "check=expansiveness N=2 P=3 H=6 result=fail");
}

TEST_CASE("continuity: identical points map to identical images") {
  const auto f0 = make_negation(2);
  const SystemPoint x(Strategy::unary_of(2, {1, 1, 2, 1}), sv(2, 0b10));
  const SystemPoint y(Strategy::unary_of(2, {1, 1, 2, 1}), sv(2, 0b10));
  const auto ix = gf_step(f0, x);
  const auto iy = gf_step(f0, y);
  CHECK(ix.state == iy.state);
  CHECK(distance(ix, iy, 3).frac_numerator == 0);
}

TEST_CASE("continuity: one hand-checked pair at depth 1") {
  // Strategies (1,1,2,...) and (1,1,1,...) share 2 = k+1 terms; after one
  // step the images share the state and the first k = 1 terms.
  const auto f0 = make_negation(2);
  const SystemPoint x(Strategy::unary_of(2, {1, 1, 2, 2}), sv(2, 0b00));
  const SystemPoint y(Strategy::unary_of(2, {1, 1, 1, 1}), sv(2, 0b00));
  const auto ix = gf_step(f0, x);
  const auto iy = gf_step(f0, y);
  CHECK(ix.state == sv(2, 0b01));
  CHECK(ix.state == iy.state);
  CHECK(ix.strategy.head() == iy.strategy.head());
  const auto d = distance(ix, iy, 3);
  CHECK(d.integer_part == 0);
  CHECK(d.frac_less_than_pow10(1));
}

TEST_CASE("continuity check finds no violations") {
  std::mt19937_64 rng(2025);
  // Every function on 2 cells.
  for (std::uint32_t idx = 0; idx < 256; ++idx) {
    std::vector<std::uint32_t> table(4);
    for (int e = 0; e < 4; ++e) table[static_cast<std::size_t>(e)] = (idx >> (2 * e)) & 3u;
    const auto report = continuity_check(UpdateFunction(2, std::move(table)), 20, 4, rng());
    CHECK(report.trials == 20);
    CHECK(report.violations == 0);
  }
  // Sampled functions on 3 cells.
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> table(8);
    for (auto& e : table) e = static_cast<std::uint32_t>(rng() % 8);
    CHECK(continuity_check(UpdateFunction(3, std::move(table)), 25, 4, rng()).violations == 0);
  }
  CHECK_THROWS_AS(continuity_check(make_negation(2), 5, 0), std::invalid_argument);
}

TEST_CASE("sensitivity: the hand example at N=2") {
  // Perturbing the term after the shared prefix makes the states differ in
  // two cells one step later.
  const auto f0 = make_negation(2);
  const int k = 2;
  const SystemPoint p(Strategy::unary_of(2, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}), sv(2, 0b00));
  const auto best = sensitivity_probe(f0, p, k, 6);
  CHECK(best.integer_part == 2);  // both cells end up different
}

TEST_CASE("sensitivity: probes reach N-1 for negation") {
  std::mt19937_64 rng(404);
  const int n = 4;
  const Negation f0(n);
  for (int trial = 0; trial < 100; ++trial) {
    const SystemPoint p(random_unary(n, 32, rng), sv(n, rng() % 16));
    const auto best = sensitivity_probe(f0, p, 3, 16);
    CHECK(best.integer_part >= 3);
  }
}

TEST_CASE("sensitivity: identical companion would stay at distance zero") {
  const auto f0 = make_negation(3);
  SystemPoint p(Strategy::unary_of(3, {1, 2, 3, 1, 2, 3, 1, 2}), sv(3, 0b101));
  SystemPoint q = p;
  for (int m = 0; m < 4; ++m) {
    CHECK(distance(p, q, 4).integer_part == 0);
    CHECK(distance(p, q, 4).frac_numerator == 0);
    p = gf_step(f0, p);
    q = gf_step(f0, q);
  }
}

TEST_CASE("sensitivity: exhausted strategies are reported") {
  const auto f0 = make_negation(2);
  const SystemPoint p(Strategy::unary_of(2, {1, 2}), sv(2, 0));
  CHECK_THROWS_AS(sensitivity_probe(f0, p, 1, 8), StrategyExhausted);
}

TEST_CASE("sensitivity: greedy fallback still separates for a non-negation function") {
  // x -> x xor 110 on 3 cells is chaotic-free territory for the planner but
  // the greedy companion still finds divergence.
  std::vector<std::uint32_t> table(8);
  for (std::uint32_t e = 0; e < 8; ++e) table[e] = e ^ 0b110;
  const UpdateFunction f(3, std::move(table));
  const SystemPoint p(Strategy::unary_of(3, {1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3}), sv(3, 0));
  CHECK(sensitivity_probe(f, p, 2, 8).integer_part >= 1);
}

TEST_CASE("expansiveness: states differing at start separate immediately") {
  CHECK(expansiveness_check_f0(2, 3, 6));
  CHECK(expansiveness_check_f0(3, 3, 8));
  CHECK(expansiveness_check_f0(2, 2, 4));
  CHECK_THROWS_AS(expansiveness_check_f0(4, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(expansiveness_check_f0(2, 5, 6), std::invalid_argument);
}

TEST_CASE("expansiveness: equal states with strategies differing at term t split at t") {
  // f_0 flips different cells at the first differing term, leaving a 2-cell
  // gap at that step.
  const auto f0 = make_negation(3);
  SystemPoint x(Strategy::unary_of(3, {1, 2, 1, 1}), sv(3, 0b000));
  SystemPoint y(Strategy::unary_of(3, {1, 2, 3, 1}), sv(3, 0b000));
  for (int m = 0; m < 3; ++m) {
    x = gf_step(f0, x);
    y = gf_step(f0, y);
  }
  CHECK(hamming(x.state, y.state) == 2);
}

TEST_CASE("entropy growth matches 2^N * N^(k-1)") {
  const auto c2 = entropy_growth(2, 8);
  REQUIRE(c2.size() == 8);
  CHECK(c2[0] == 4);  // one segment per initial state
  CHECK(c2[1] == 8);  // 4 states x 2 distinct one-step successors
  std::uint64_t expected = 4;
  for (std::size_t k = 1; k < c2.size(); ++k) {
    expected *= 2;
    CHECK(c2[k] == expected);
  }

  const auto c3 = entropy_growth(3, 8);
  expected = 8;
  CHECK(c3[0] == 8);
  for (std::size_t k = 1; k < c3.size(); ++k) {
    expected *= 3;
    CHECK(c3[k] == expected);
  }

  CHECK_THROWS_AS(entropy_growth(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(entropy_growth(2, 11), std::invalid_argument);
}

TEST_CASE("fitted log slope approaches ln N") {
  const auto c2 = entropy_growth(2, 8);
  CHECK(std::abs(fitted_log_slope(c2) - std::log(2.0)) < 0.05 * std::log(2.0));
  const auto c3 = entropy_growth(3, 8);
  CHECK(std::abs(fitted_log_slope(c3) - std::log(3.0)) < 0.05 * std::log(3.0));
}
