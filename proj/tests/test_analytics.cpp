#include "walksearch/analytics.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "walksearch/qw_continuous.hpp"
#include "walksearch/qw_discrete.hpp"
#include "walksearch/rw_continuous.hpp"
#include "walksearch/rw_discrete.hpp"

using namespace walksearch;
using namespace walksearch::analytics;

TEST_CASE("delta endpoints and the worked value") {
  CHECK(delta(4, 0.0) == 0.0);
  CHECK(delta(4, 3.1106) == doctest::Approx(0.1762).epsilon(0.003));
  CHECK(delta(4, 1e5) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK_THROWS_AS(delta(2, 1.0), std::invalid_argument);
}

TEST_CASE("delta agrees with the textbook two-term difference") {
  for (int n : {3, 4, 10, 50}) {
    for (double t = 0.0; t <= 30.0 * n; t += 0.7 * n) {
      const double naive =
          std::exp(-t / n) - std::pow((n - 2.0) / (n - 1.0), t);
      CHECK(std::abs(delta(n, t) - naive) <= 1e-12);
    }
  }
}

TEST_CASE("delta is positive for every t > 0") {
  for (int n : {3, 7, 64, 1000}) {
    for (double t = 0.05; t <= 20.0 * n; t *= 1.4) CHECK(delta(n, t) > 0.0);
  }
}

TEST_CASE("closed-form argmax against golden-section maximization") {
  for (int n : {3, 4, 5, 8, 20, 100, 512}) {
    const double numeric = testutil::delta_argmax_oracle(n);
    CHECK(std::abs(delta_argmax(n) - numeric) <= 1e-6);
  }
  CHECK(delta_argmax(4) == doctest::Approx(3.1106).epsilon(3e-4));
}

TEST_CASE("the derivative vanishes at the closed-form argmax") {
  for (int n : {3, 4, 12, 100, 512}) {
    const double t = delta_argmax(n);
    const double beta = std::log((n - 1.0) / (n - 2.0));
    const double derivative =
        -std::exp(-t / n) / n + beta * std::pow((n - 2.0) / (n - 1.0), t);
    CHECK(std::abs(derivative) <= 1e-8);
    CHECK(delta(n, t) >= delta(n, t + 0.01));
    CHECK(delta(n, t) >= delta(n, std::max(t - 0.01, 0.0)));
  }
}

TEST_CASE("delta_max report") {
  const DeltaReport r4 = delta_max(4);
  CHECK(r4.t_star == doctest::Approx(3.1106).epsilon(3e-4));
  CHECK(r4.delta_max == doctest::Approx(0.1762).epsilon(2e-3));
  CHECK(r4.asymptote == doctest::Approx(0.137954790439).epsilon(1e-9));
  CHECK(r4.asymptote == doctest::Approx(3.0 / (2.0 * std::numbers::e * 4.0)).epsilon(1e-15));

  const DeltaReport r400 = delta_max(400);
  CHECK(r400.delta_max / r400.asymptote == doctest::Approx(1.0).epsilon(0.05));

  for (int n = 4; n <= 512; ++n) {
    CHECK(delta_max(2 * n).delta_max < delta_max(n).delta_max);
  }
}

TEST_CASE("the remainder of the delta_max asymptote stays O(1/n^2)") {
  double previous = 1e9;
  for (int n : {64, 128, 256, 512, 1024}) {
    const DeltaReport r = delta_max(n);
    const double scaled = n * double(n) * std::abs(r.delta_max - r.asymptote);
    CHECK(scaled <= 0.5);
    CHECK(scaled <= previous + 1e-6);
    previous = scaled;
  }
}

TEST_CASE("delta bounds the gap between the two random walks") {
  const int n = 10000;
  const double bound = delta_max(n).delta_max;
  for (double t = 0.0; t <= 3.0 * n; t += n / 40.0) {
    const double gap = std::abs(rw_discrete::success_closed_form(n, t) -
                                rw_continuous::success_closed_form(n, t));
    CHECK(gap <= bound);
  }
}

TEST_CASE("asymptotic quantum comparison") {
  const QuantumComparison at_zero = quantum_asymptotic_comparison(100, 0.0);
  CHECK(at_zero.discrete == 0.0);
  CHECK(at_zero.continuous == 0.0);

  const double root_n = 10.0;
  const QuantumComparison dt_peak = quantum_asymptotic_comparison(
      100, std::numbers::pi / (2.0 * std::numbers::sqrt2) * root_n);
  CHECK(dt_peak.discrete == doctest::Approx(0.5).epsilon(1e-12));
  const QuantumComparison ct_peak =
      quantum_asymptotic_comparison(100, std::numbers::pi / 2.0 * root_n);
  CHECK(ct_peak.continuous == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("summary table delegates to the module operations") {
  const SummaryTable t = summary_table(4, 0.1);
  CHECK(t.columns[0].walk == "rw-discrete");
  CHECK(t.columns[0].runtime.value == rw_discrete::runtime_for_epsilon(4, 0.1));
  CHECK(t.columns[0].runtime.value == doctest::Approx(4.969).epsilon(2e-4));
  CHECK(t.columns[0].probability.value == doctest::Approx(0.9));
  CHECK(t.columns[1].runtime.value == rw_continuous::runtime_for_epsilon(4, 0.1));
  CHECK(t.columns[2].runtime.value == static_cast<double>(qw_discrete::optimal_steps(4)));
  CHECK(t.columns[3].runtime.value == qw_continuous::runtime(4));
  CHECK(t.columns[3].runtime.value == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(t.columns[0].overall_order == "O(N)");
  CHECK(t.columns[1].overall_order == "O(N)");
  CHECK(t.columns[2].overall_order == "O(sqrt(N))");
  CHECK(t.columns[3].overall_order == "O(sqrt(N))");
}

TEST_CASE("summary table at n = 100 carries the headline quantum cell") {
  const SummaryTable t = summary_table(100, 0.1);
  CHECK(t.columns[2].probability.value == doctest::Approx(0.59).epsilon(0.017));
  CHECK(t.columns[2].probability.value == qw_discrete::success_at_optimum(100));
  CHECK(t.columns[2].asymptotic_probability.value == 0.5);
}

TEST_CASE("summary table handles the two-vertex graph with markers") {
  const SummaryTable t = summary_table(2, 0.25);
  CHECK(t.columns[0].probability.has_value);
  CHECK_FALSE(t.columns[0].runtime.has_value);  // formula undefined at n = 2
  CHECK(t.columns[0].asymptotic_runtime.has_value);
  CHECK(t.columns[1].runtime.has_value);
  CHECK_FALSE(t.columns[2].probability.has_value);
  CHECK(t.columns[2].probability.label == "requires N >= 3");
  CHECK(t.columns[3].runtime.has_value);
}

TEST_CASE("summary table rejects out-of-range epsilon") {
  CHECK_THROWS_AS(summary_table(4, 0.8), std::domain_error);
  CHECK_THROWS_AS(summary_table(4, 0.0), std::domain_error);
}
