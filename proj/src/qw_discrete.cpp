#include "walksearch/qw_discrete.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace walksearch::qw_discrete {

namespace {

void require_coined(int n) {
  if (n < 3) {
    throw std::invalid_argument("coined walk requires n >= 3 (two distinct unmarked vertices)");
  }
}

int arcs(int n) { return n * (n - 1); }

}  // namespace

CoinedOperators::CoinedOperators(const CompleteGraphInstance& g) : n_(g.n), marked_(g.marked) {
  require_coined(g.n);
}

CoinedOperators build_operators(const CompleteGraphInstance& g) {
  return CoinedOperators(g);
}

ArcState CoinedOperators::oracle(const ArcState& s) const {
  if (s.n != n_) throw std::invalid_argument("arc state dimension mismatch");
  std::vector<cplx> amps = s.amps;
  const int base = (marked_ - 1) * (n_ - 1);
  cplx sum{};
  for (int k = 0; k < n_ - 1; ++k) sum += amps[base + k];
  const cplx twice_mean = 2.0 / (n_ - 1) * sum;
  for (int k = 0; k < n_ - 1; ++k) amps[base + k] -= twice_mean;
  return ArcState(n_, std::move(amps));
}

ArcState CoinedOperators::sign_flip_oracle(const ArcState& s) const {
  if (s.n != n_) throw std::invalid_argument("arc state dimension mismatch");
  std::vector<cplx> amps = s.amps;
  const int base = (marked_ - 1) * (n_ - 1);
  for (int k = 0; k < n_ - 1; ++k) amps[base + k] = -amps[base + k];
  return ArcState(n_, std::move(amps));
}

ArcState CoinedOperators::coin(const ArcState& s) const {
  if (s.n != n_) throw std::invalid_argument("arc state dimension mismatch");
  std::vector<cplx> amps = s.amps;
  for (int v = 0; v < n_; ++v) {
    const int base = v * (n_ - 1);
    cplx sum{};
    for (int k = 0; k < n_ - 1; ++k) sum += amps[base + k];
    const cplx twice_mean = 2.0 / (n_ - 1) * sum;
    for (int k = 0; k < n_ - 1; ++k) amps[base + k] = twice_mean - amps[base + k];
  }
  return ArcState(n_, std::move(amps));
}

ArcState CoinedOperators::shift(const ArcState& s) const {
  if (s.n != n_) throw std::invalid_argument("arc state dimension mismatch");
  std::vector<cplx> amps = s.amps;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      std::swap(amps[arc_index(n_, i, j)], amps[arc_index(n_, j, i)]);
    }
  }
  return ArcState(n_, std::move(amps));
}

ArcState step(const ArcState& s, const CoinedOperators& ops) {
  return ops.shift(ops.coin(ops.oracle(s)));
}

linalg::RealMatrix oracle_matrix(const CompleteGraphInstance& g) {
  require_coined(g.n);
  const int dim = arcs(g.n);
  linalg::RealMatrix m = linalg::RealMatrix::identity(dim);
  const int base = (g.marked - 1) * (g.n - 1);
  for (int r = 0; r < g.n - 1; ++r) {
    for (int c = 0; c < g.n - 1; ++c) m(base + r, base + c) -= 2.0 / (g.n - 1);
  }
  return m;
}

linalg::RealMatrix coin_matrix(const CompleteGraphInstance& g) {
  require_coined(g.n);
  const int dim = arcs(g.n);
  linalg::RealMatrix m(dim, dim);
  for (int v = 0; v < g.n; ++v) {
    const int base = v * (g.n - 1);
    for (int r = 0; r < g.n - 1; ++r) {
      for (int c = 0; c < g.n - 1; ++c) {
        m(base + r, base + c) = 2.0 / (g.n - 1) - (r == c ? 1.0 : 0.0);
      }
    }
  }
  return m;
}

linalg::RealMatrix shift_matrix(const CompleteGraphInstance& g) {
  require_coined(g.n);
  const int dim = arcs(g.n);
  linalg::RealMatrix m(dim, dim);
  for (int i = 1; i <= g.n; ++i) {
    for (int j = 1; j <= g.n; ++j) {
      if (i != j) m(arc_index(g.n, j, i), arc_index(g.n, i, j)) = 1.0;
    }
  }
  return m;
}

EvolutionRecord evolve_full(const CompleteGraphInstance& g, int steps) {
  if (steps < 0) throw std::domain_error("step count must be nonnegative");
  const CoinedOperators ops = build_operators(g);
  ArcState state = uniform_superposition_arcs(g);

  EvolutionRecord rec;
  auto record = [&](int t) {
    double norm_sq = 0.0;
    for (const cplx& a : state.amps) norm_sq += std::norm(a);
    rec.samples.push_back({static_cast<double>(t), vertex_probability(state, g.marked), norm_sq});
  };
  record(0);
  for (int t = 1; t <= steps; ++t) {
    state = step(state, ops);
    record(t);
  }
  return rec;
}

linalg::RealMatrix subspace_operator(int n) {
  require_coined(n);
  linalg::RealMatrix u(3, 3);
  const double diag = (n - 3.0) / (n - 1.0);
  const double mix = 2.0 * std::sqrt(n - 2.0) / (n - 1.0);
  u(0, 1) = -diag;
  u(0, 2) = mix;
  u(1, 0) = -1.0;
  u(2, 1) = mix;
  u(2, 2) = diag;
  return u;
}

double step_angle(int n) {
  require_coined(n);
  return std::atan2(std::sqrt(2.0 * n - 3.0), n - 2.0);
}

std::vector<Subspace3D> evolve_subspace(const CompleteGraphInstance& g, int steps) {
  if (steps < 0) throw std::domain_error("step count must be nonnegative");
  require_coined(g.n);
  const linalg::RealMatrix u = subspace_operator(g.n);
  const double phi = step_angle(g.n);
  std::vector<double> v{1.0 / std::sqrt(double(g.n)), 1.0 / std::sqrt(double(g.n)),
                        std::sqrt((g.n - 2.0) / g.n)};
  std::vector<Subspace3D> series;
  series.push_back({v[0], v[1], v[2], phi});
  for (int t = 1; t <= steps; ++t) {
    v = linalg::matvec(u, v);
    series.push_back({v[0], v[1], v[2], phi});
  }
  return series;
}

namespace {

double eigen_expansion(int n, long long t, double sin_sign) {
  require_coined(n);
  if (t < 0) throw std::domain_error("step count must be nonnegative");
  const double phi = step_angle(n);
  const double parity = (t % 2 == 0) ? 1.0 : -1.0;
  const double spread = std::sqrt(2.0 * n - 3.0);
  const double value = (n - 1.0) * (std::cos(phi * t) + sin_sign * std::sin(phi * t) * spread) +
                       parity * (n - 2.0);
  const double denom = (2.0 * n - 3.0) * (2.0 * n - 3.0) * n;
  return value * value / denom;
}

}  // namespace

double success_closed_form(int n, long long t) { return eigen_expansion(n, t, +1.0); }

double ba_probability_closed_form(int n, long long t) { return eigen_expansion(n, t, -1.0); }

long long optimal_steps(int n) {
  require_coined(n);
  const double target = std::numbers::pi / (2.0 * step_angle(n));
  // llround rounds halves away from zero, so an exact odd midpoint goes up.
  return 2 * std::llround(target / 2.0);
}

double success_at_optimum(int n) {
  require_coined(n);
  const double root = std::sqrt(2.0 * n) + 1.0;
  return n * root * root / ((2.0 * n - 3.0) * (2.0 * n - 3.0));
}

RepetitionPlan repetition_plan(int n, double eps) {
  require_coined(n);
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::domain_error("epsilon must satisfy 0 < eps < 1");
  }
  const long long runs = static_cast<long long>(std::ceil(std::log2(1.0 / eps)));
  return {runs, static_cast<double>(runs) * static_cast<double>(optimal_steps(n))};
}

}  // namespace walksearch::qw_discrete
