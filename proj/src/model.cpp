#include "walksearch/model.hpp"

#include <cmath>
#include <stdexcept>

namespace walksearch {

namespace {

constexpr double kSumTol = 1e-10;
constexpr double kNegativeTol = -1e-12;

double norm_squared(const std::vector<cplx>& amps) {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return s;
}

void check_vertex(int n, int v) {
  if (v < 1 || v > n) throw std::out_of_range("vertex label out of range 1..n");
}

template <typename State>
int draw(const State& s, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double cum = 0.0;
  for (int v = 1; v < n; ++v) {
    cum += vertex_probability(s, v);
    if (u < cum) return v;
  }
  return n;
}

}  // namespace

CompleteGraphInstance::CompleteGraphInstance(int n_, int marked_) : n(n_), marked(marked_) {
  if (n < 2) throw std::invalid_argument("complete-graph instance requires at least 2 vertices");
  if (marked < 1 || marked > n) throw std::invalid_argument("marked vertex must lie in 1..n");
}

ProbabilityState::ProbabilityState(std::vector<double> p) : probs(std::move(p)) {
  if (probs.empty()) throw std::invalid_argument("probability state must be nonempty");
  double sum = 0.0;
  for (double v : probs) {
    if (!std::isfinite(v) || v < kNegativeTol) {
      throw std::invalid_argument("probabilities must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw std::invalid_argument("probabilities must sum to 1");
  }
}

VertexAmplitudeState::VertexAmplitudeState(std::vector<cplx> a) : amps(std::move(a)) {
  if (amps.empty()) throw std::invalid_argument("amplitude state must be nonempty");
  if (std::abs(norm_squared(amps) - 1.0) > kSumTol) {
    throw std::invalid_argument("amplitudes must have unit norm");
  }
}

ArcState::ArcState(int n_, std::vector<cplx> a) : n(n_), amps(std::move(a)) {
  if (n < 2) throw std::invalid_argument("arc state requires at least 2 vertices");
  if (amps.size() != static_cast<std::size_t>(n) * (n - 1)) {
    throw std::invalid_argument("arc state must hold n(n-1) amplitudes");
  }
  if (std::abs(norm_squared(amps) - 1.0) > kSumTol) {
    throw std::invalid_argument("amplitudes must have unit norm");
  }
}

int arc_index(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw std::out_of_range("arc (i -> j) requires distinct vertices in 1..n");
  }
  return (i - 1) * (n - 1) + (j < i ? j - 1 : j - 2);
}

std::vector<double> sample_times(double t_max, double dt) {
  if (!(t_max >= 0)) throw std::domain_error("t_max must be nonnegative");
  if (!(dt > 0)) throw std::domain_error("dt must be positive");
  if (t_max / dt > 1e8) throw std::domain_error("time grid would exceed 1e8 samples");

  std::vector<double> ts;
  const long long last = static_cast<long long>(std::floor(t_max / dt + 1e-9));
  for (long long k = 0; k <= last; ++k) ts.push_back(static_cast<double>(k) * dt);
  if (ts.back() > t_max) ts.back() = t_max;
  if (t_max - ts.back() > 1e-9 * dt) ts.push_back(t_max);
  return ts;
}

ProbabilityState uniform_distribution(const CompleteGraphInstance& g) {
  return ProbabilityState(std::vector<double>(g.n, 1.0 / g.n));
}

VertexAmplitudeState uniform_superposition_vertices(const CompleteGraphInstance& g) {
  return VertexAmplitudeState(std::vector<cplx>(g.n, cplx{1.0 / std::sqrt(double(g.n)), 0.0}));
}

ArcState uniform_superposition_arcs(const CompleteGraphInstance& g) {
  if (g.n < 3) {
    throw std::invalid_argument("arc superposition requires at least 3 vertices");
  }
  const std::size_t arcs = static_cast<std::size_t>(g.n) * (g.n - 1);
  return ArcState(g.n, std::vector<cplx>(arcs, cplx{1.0 / std::sqrt(double(arcs)), 0.0}));
}

double vertex_probability(const ProbabilityState& s, int v) {
  check_vertex(s.n(), v);
  return s.probs[v - 1];
}

double vertex_probability(const VertexAmplitudeState& s, int v) {
  check_vertex(s.n(), v);
  return std::norm(s.amps[v - 1]);
}

double vertex_probability(const ArcState& s, int v) {
  check_vertex(s.n, v);
  double p = 0.0;
  for (int j = 1; j <= s.n; ++j) {
    if (j != v) p += std::norm(s.amps[arc_index(s.n, v, j)]);
  }
  return p;
}

int sample_vertex(const ProbabilityState& s, std::mt19937_64& rng) {
  return draw(s, s.n(), rng);
}

int sample_vertex(const VertexAmplitudeState& s, std::mt19937_64& rng) {
  return draw(s, s.n(), rng);
}

int sample_vertex(const ArcState& s, std::mt19937_64& rng) {
  return draw(s, s.n, rng);
}

}  // namespace walksearch
