#include "walksearch/qw_continuous.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walksearch::qw_continuous {

double critical_gamma(int n) {
  if (n < 2) throw std::invalid_argument("critical gamma requires n >= 2");
  return 1.0 / n;
}

SearchHamiltonian build_hamiltonian(const CompleteGraphInstance& g, double gamma) {
  if (!(gamma > 0)) throw std::domain_error("gamma must be positive");
  const int n = g.n;
  linalg::RealMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h(i, j) = (i == j) ? gamma * (n - 1.0) : -gamma;
    }
  }
  h(g.marked - 1, g.marked - 1) -= 1.0;
  return {h, gamma};
}

linalg::RealMatrix subspace_hamiltonian(int n, double gamma) {
  if (n < 2) throw std::invalid_argument("subspace Hamiltonian requires n >= 2");
  if (!(gamma > 0)) throw std::domain_error("gamma must be positive");
  linalg::RealMatrix h(2, 2);
  const double coupling = -gamma * std::sqrt(n - 1.0);
  h(0, 0) = gamma * (n - 1.0) - 1.0;
  h(0, 1) = coupling;
  h(1, 0) = coupling;
  h(1, 1) = gamma;
  return h;
}

namespace {

// psi(t) = V e^{-i lambda t} V^T psi0 for real-symmetric H = V diag(lambda) V^T.
std::vector<cplx> propagate(const linalg::RealEigenSystem& eig, const std::vector<cplx>& psi0,
                            double t) {
  const int n = static_cast<int>(psi0.size());
  std::vector<cplx> modes(psi0.size());
  for (int k = 0; k < n; ++k) {
    cplx acc{};
    for (int i = 0; i < n; ++i) acc += eig.vectors(i, k) * psi0[i];
    modes[k] = std::polar(1.0, -eig.values[k] * t) * acc;
  }
  std::vector<cplx> psi(psi0.size());
  for (int i = 0; i < n; ++i) {
    cplx acc{};
    for (int k = 0; k < n; ++k) acc += eig.vectors(i, k) * modes[k];
    psi[i] = acc;
  }
  return psi;
}

}  // namespace

EvolutionRecord evolve_full(const CompleteGraphInstance& g, double gamma, double t_max,
                            double dt) {
  const std::vector<double> times = sample_times(t_max, dt);
  const SearchHamiltonian h = build_hamiltonian(g, gamma);
  const linalg::RealEigenSystem eig = linalg::hermitian_eigen(h.matrix);
  const std::vector<cplx> psi0 = uniform_superposition_vertices(g).amps;

  EvolutionRecord rec;
  for (double t : times) {
    const std::vector<cplx> psi = propagate(eig, psi0, t);
    double norm_sq = 0.0;
    for (const cplx& a : psi) norm_sq += std::norm(a);
    rec.samples.push_back({t, std::norm(psi[g.marked - 1]), norm_sq});
  }
  return rec;
}

VertexAmplitudeState state_at(const CompleteGraphInstance& g, double gamma, double t) {
  if (!(t >= 0)) throw std::domain_error("time must be nonnegative");
  const SearchHamiltonian h = build_hamiltonian(g, gamma);
  const linalg::RealEigenSystem eig = linalg::hermitian_eigen(h.matrix);
  return VertexAmplitudeState(propagate(eig, uniform_superposition_vertices(g).amps, t));
}

Subspace2DQuantum evolve_subspace(const CompleteGraphInstance& g, double t) {
  if (!(t >= 0)) throw std::domain_error("time must be nonnegative");
  const int n = g.n;
  const linalg::RealEigenSystem eig =
      linalg::hermitian_eigen(subspace_hamiltonian(n, critical_gamma(n)));
  const std::vector<cplx> start{cplx{1.0 / std::sqrt(double(n)), 0.0},
                                cplx{std::sqrt((n - 1.0) / n), 0.0}};
  const std::vector<cplx> out = propagate(eig, start, t);
  return {out[0], out[1]};
}

double success_closed_form(int n, double t) {
  if (n < 2) throw std::invalid_argument("closed form requires n >= 2");
  if (!(t >= 0)) throw std::domain_error("time must be nonnegative");
  const double angle = t / std::sqrt(double(n));
  const double s = std::sin(angle);
  const double c = std::cos(angle);
  return s * s + c * c / n;
}

double runtime(int n) {
  if (n < 2) throw std::invalid_argument("runtime requires n >= 2");
  return std::numbers::pi * std::sqrt(double(n)) / 2.0;
}

double default_dt(int n) { return std::numbers::pi * std::sqrt(double(n)) / 200.0; }

}  // namespace walksearch::qw_continuous
