#include "walksearch/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "walksearch/qw_continuous.hpp"
#include "walksearch/qw_discrete.hpp"
#include "walksearch/rw_continuous.hpp"
#include "walksearch/rw_discrete.hpp"

namespace walksearch::analytics {

namespace {

void require_delta_domain(int n) {
  if (n < 3) throw std::invalid_argument("delta analysis requires n >= 3");
}

double decay_rate(int n) { return std::log1p(1.0 / (n - 2)); }  // ln((n-1)/(n-2))

}  // namespace

double delta(int n, double t) {
  require_delta_domain(n);
  if (!(t >= 0)) throw std::domain_error("time must be nonnegative");
  // e^{-t/n} - e^{-bt} = -e^{-t/n} expm1(-(b - 1/n) t); the factored form
  // avoids the cancellation of two nearly equal exponentials at large n.
  const double rate_gap = decay_rate(n) - 1.0 / n;
  return -std::exp(-t / n) * std::expm1(-rate_gap * t);
}

double delta_argmax(int n) {
  require_delta_domain(n);
  const double scaled = n * decay_rate(n) - 1.0;  // n b - 1
  return n * std::log1p(scaled) / scaled;
}

DeltaReport delta_max(int n) {
  const double t_star = delta_argmax(n);
  return {n, t_star, delta(n, t_star), 3.0 / (2.0 * std::numbers::e * n)};
}

QuantumComparison quantum_asymptotic_comparison(int n, double t) {
  if (n < 3) throw std::invalid_argument("quantum comparison requires n >= 3");
  const double root_n = std::sqrt(double(n));
  const double sd = std::sin(std::numbers::sqrt2 * t / root_n);
  const double sc = std::sin(t / root_n);
  return {0.5 * sd * sd, sc * sc};
}

SummaryTable summary_table(int n, double eps) {
  if (n < 2) throw std::invalid_argument("summary table requires n >= 2");
  const double initial_miss = (n - 1.0) / n;
  if (!(eps > 0.0) || eps > initial_miss) {
    throw std::domain_error("epsilon must satisfy 0 < eps <= (n-1)/n");
  }

  SummaryTable table{n, eps, {}};

  SummaryColumn& rwd = table.columns[0];
  rwd.walk = "rw-discrete";
  rwd.probability = SummaryCell::of(1.0 - eps);
  rwd.runtime = (n == 2)
                    ? SummaryCell::marker("1 (one step reaches probability 1)")
                    : SummaryCell::of(rw_discrete::runtime_for_epsilon(n, eps));
  rwd.asymptotic_probability = SummaryCell::of(1.0 - eps);
  rwd.asymptotic_runtime = SummaryCell::of(rw_discrete::asymptotic_runtime(n, eps));
  rwd.overall_order = "O(N)";

  SummaryColumn& rwc = table.columns[1];
  rwc.walk = "rw-continuous";
  rwc.probability = SummaryCell::of(1.0 - eps);
  rwc.runtime = SummaryCell::of(rw_continuous::runtime_for_epsilon(n, eps));
  rwc.asymptotic_probability = SummaryCell::of(1.0 - eps);
  rwc.asymptotic_runtime = SummaryCell::of(rw_continuous::asymptotic_runtime(n, eps));
  rwc.overall_order = "O(N)";

  SummaryColumn& qwd = table.columns[2];
  qwd.walk = "qw-discrete";
  if (n < 3) {
    const SummaryCell marker = SummaryCell::marker("requires N >= 3");
    qwd.probability = marker;
    qwd.runtime = marker;
    qwd.asymptotic_probability = marker;
    qwd.asymptotic_runtime = marker;
  } else {
    qwd.probability = SummaryCell::of(qw_discrete::success_at_optimum(n));
    qwd.runtime = SummaryCell::of(static_cast<double>(qw_discrete::optimal_steps(n)));
    qwd.asymptotic_probability = SummaryCell::of(0.5);
    // Hard-coded asymptote pi/(2 sqrt(2)) sqrt(n), like the other asymptotic
    // rows; no module operation computes the un-rounded value.
    qwd.asymptotic_runtime = SummaryCell::of(
        std::numbers::pi / (2.0 * std::numbers::sqrt2) * std::sqrt(double(n)));
  }
  qwd.overall_order = "O(sqrt(N))";

  SummaryColumn& qwc = table.columns[3];
  qwc.walk = "qw-continuous";
  qwc.probability = SummaryCell::of(1.0);
  qwc.runtime = SummaryCell::of(qw_continuous::runtime(n));
  qwc.asymptotic_probability = SummaryCell::of(1.0);
  qwc.asymptotic_runtime = SummaryCell::of(qw_continuous::runtime(n));
  qwc.overall_order = "O(sqrt(N))";

  return table;
}

}  // namespace walksearch::analytics
