#include "walksearch/rw_continuous.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace walksearch::rw_continuous {

AbsorbingLaplacian build_absorbing_laplacian(const CompleteGraphInstance& g) {
  const int n = g.n;
  const int a = g.marked - 1;
  linalg::RealMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    if (j == a) continue;  // absorbing column stays zero
    for (int i = 0; i < n; ++i) m(i, j) = (i == j) ? -(n - 1.0) : 1.0;
  }
  return {m, static_cast<double>(n)};
}

double measured_spectral_norm(const AbsorbingLaplacian& lap) {
  return linalg::spectral_norm(lap.matrix);
}

EvolutionRecord evolve_full(const CompleteGraphInstance& g, double t_max, double dt) {
  const std::vector<double> times = sample_times(t_max, dt);
  const AbsorbingLaplacian lap = build_absorbing_laplacian(g);

  linalg::RealMatrix generator = lap.matrix;
  for (double& v : generator.data()) v /= lap.norm;

  std::vector<double> state = uniform_distribution(g).probs;
  EvolutionRecord rec;
  auto record = [&](double t) {
    const double total = std::accumulate(state.begin(), state.end(), 0.0);
    rec.samples.push_back({t, state[g.marked - 1], total});
  };

  record(times.front());
  if (times.size() > 1) {
    // One propagator per distinct spacing; the grid has at most two (dt and
    // the final remainder).
    const linalg::RealMatrix hop = linalg::expm(generator, dt, 1e-13);
    for (std::size_t k = 1; k < times.size(); ++k) {
      const double span = times[k] - times[k - 1];
      if (std::abs(span - dt) <= 1e-12 * dt) {
        state = linalg::matvec(hop, state);
      } else {
        state = linalg::expm_apply(generator, span, state, 1e-13);
      }
      record(times[k]);
    }
  }
  return rec;
}

rw_discrete::Subspace2DClassical evolve_subspace(const CompleteGraphInstance& g, double t) {
  if (!(t >= 0)) throw std::domain_error("time must be nonnegative");
  const int n = g.n;
  linalg::RealMatrix reduced(2, 2);
  reduced(0, 0) = 0.0;
  reduced(0, 1) = 1.0;
  reduced(1, 0) = 0.0;
  reduced(1, 1) = -1.0;
  const std::vector<double> start{1.0 / n, (n - 1.0) / n};
  const std::vector<double> out = linalg::expm_apply(reduced, t / n, start, 1e-13);
  return {out[0], out[1]};
}

double success_closed_form(int n, double t) {
  if (n < 2) throw std::invalid_argument("closed form requires n >= 2");
  if (!(t >= 0)) throw std::domain_error("time must be nonnegative");
  return 1.0 - (n - 1.0) / n * std::exp(-t / n);
}

double runtime_for_epsilon(int n, double eps) {
  if (n < 2) throw std::invalid_argument("runtime requires n >= 2");
  const double initial_miss = (n - 1.0) / n;
  if (!(eps > 0.0) || eps > initial_miss) {
    throw std::domain_error("epsilon must satisfy 0 < eps <= (n-1)/n");
  }
  if (eps >= initial_miss) return 0.0;
  return n * std::log(initial_miss / eps);
}

double asymptotic_runtime(int n, double eps) {
  if (n < 2) throw std::invalid_argument("asymptotic runtime requires n >= 2");
  if (!(eps > 0.0) || eps > 1.0) {
    throw std::domain_error("epsilon must satisfy 0 < eps <= 1");
  }
  return n * std::log(1.0 / eps);
}

double default_dt(int n) { return n / 100.0; }

}  // namespace walksearch::rw_continuous
