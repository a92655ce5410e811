#include "walksearch/rw_discrete.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace walksearch::rw_discrete {

TransitionMatrix build_transition(const CompleteGraphInstance& g) {
  const int n = g.n;
  const int a = g.marked - 1;
  linalg::RealMatrix m(n, n);
  const double hop = 1.0 / (n - 1);
  for (int j = 0; j < n; ++j) {
    if (j == a) {
      m(j, j) = 1.0;
      continue;
    }
    for (int i = 0; i < n; ++i) {
      if (i != j) m(i, j) = hop;
    }
  }
  return {m};
}

EvolutionRecord evolve_full(const CompleteGraphInstance& g, int steps) {
  if (steps < 0) throw std::domain_error("step count must be nonnegative");
  const linalg::RealMatrix p = build_transition(g).matrix;
  std::vector<double> state = uniform_distribution(g).probs;

  EvolutionRecord rec;
  auto record = [&](int t) {
    const double total = std::accumulate(state.begin(), state.end(), 0.0);
    rec.samples.push_back({static_cast<double>(t), state[g.marked - 1], total});
  };
  record(0);
  for (int t = 1; t <= steps; ++t) {
    state = linalg::matvec(p, state);
    record(t);
  }
  return rec;
}

std::vector<Subspace2DClassical> evolve_subspace(const CompleteGraphInstance& g, int steps) {
  if (steps < 0) throw std::domain_error("step count must be nonnegative");
  const int n = g.n;
  double marked = 1.0 / n;
  double unmarked = static_cast<double>(n - 1) / n;
  std::vector<Subspace2DClassical> series;
  series.push_back({marked, unmarked});
  for (int t = 1; t <= steps; ++t) {
    const double next_marked = marked + unmarked / (n - 1);
    const double next_unmarked = unmarked * (n - 2.0) / (n - 1.0);
    marked = next_marked;
    unmarked = next_unmarked;
    series.push_back({marked, unmarked});
  }
  return series;
}

double success_closed_form(int n, double t) {
  if (n < 2) throw std::invalid_argument("closed form requires n >= 2");
  if (!(t >= 0)) throw std::domain_error("time must be nonnegative");
  const double stay = (n - 2.0) / (n - 1.0);
  return 1.0 - (n - 1.0) / n * std::pow(stay, t);
}

double runtime_for_epsilon(int n, double eps) {
  if (n == 2) {
    throw std::domain_error(
        "runtime formula is undefined at n = 2; one step of the walk already "
        "reaches success probability 1");
  }
  if (n < 2) throw std::invalid_argument("runtime requires n >= 2");
  const double initial_miss = (n - 1.0) / n;
  if (!(eps > 0.0) || eps > initial_miss) {
    throw std::domain_error("epsilon must satisfy 0 < eps <= (n-1)/n");
  }
  const double arg = static_cast<double>(n) / (n - 1.0) * eps;
  if (arg >= 1.0) return 0.0;  // target already met by the uniform start
  const double t = std::log(arg) / std::log((n - 2.0) / (n - 1.0));
  return std::max(t, 0.0);
}

double asymptotic_runtime(int n, double eps) {
  if (n < 2) throw std::invalid_argument("asymptotic runtime requires n >= 2");
  if (!(eps > 0.0) || eps > 1.0) {
    throw std::domain_error("epsilon must satisfy 0 < eps <= 1");
  }
  return n * std::log(1.0 / eps);
}

}  // namespace walksearch::rw_discrete
