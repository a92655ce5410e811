#pragma once

#include <complex>
#include <random>
#include <vector>

namespace walksearch {

using cplx = std::complex<double>;

/// Search instance: the complete graph on n vertices with one marked vertex.
/// Vertex labels are 1-based at the interface and converted to 0-based
/// storage exactly once, at this boundary.
struct CompleteGraphInstance {
  int n;
  int marked;

  CompleteGraphInstance(int n_, int marked_);
};

/// Classical state: one probability per vertex, summing to 1.
struct ProbabilityState {
  std::vector<double> probs;

  explicit ProbabilityState(std::vector<double> p);
  int n() const { return static_cast<int>(probs.size()); }
};

/// Vertex-space quantum state: one complex amplitude per vertex, unit norm.
struct VertexAmplitudeState {
  std::vector<cplx> amps;

  explicit VertexAmplitudeState(std::vector<cplx> a);
  int n() const { return static_cast<int>(amps.size()); }
};

/// Arc-space quantum state for the coined walk: one amplitude per directed
/// edge (i -> j), i != j, ordered lexicographically by (i, j). Within a
/// vertex block the first direction points to the lowest-numbered vertex;
/// see arc_index.
struct ArcState {
  int n;
  std::vector<cplx> amps;

  ArcState(int n_, std::vector<cplx> a);
};

/// Slot of arc (i -> j) in an ArcState, with 1-based vertex labels:
/// (i-1)(n-1) + (j-1 if j < i else j-2).
int arc_index(int n, int i, int j);

struct EvolutionSample {
  double t;
  double success;
  double conserved;  // total probability or squared norm
};

/// Time series of (t, success probability, conserved quantity) samples.
struct EvolutionRecord {
  std::vector<EvolutionSample> samples;
};

/// Grid 0, dt, 2dt, ... with a final sample pinned at exactly t_max when the
/// grid does not land on it.
std::vector<double> sample_times(double t_max, double dt);

ProbabilityState uniform_distribution(const CompleteGraphInstance& g);
VertexAmplitudeState uniform_superposition_vertices(const CompleteGraphInstance& g);
ArcState uniform_superposition_arcs(const CompleteGraphInstance& g);

/// Born-rule probability of finding the walker at vertex v (1-based).
double vertex_probability(const ProbabilityState& s, int v);
double vertex_probability(const VertexAmplitudeState& s, int v);
double vertex_probability(const ArcState& s, int v);

/// Measurement plumbing: draw one vertex from the state's distribution.
int sample_vertex(const ProbabilityState& s, std::mt19937_64& rng);
int sample_vertex(const VertexAmplitudeState& s, std::mt19937_64& rng);
int sample_vertex(const ArcState& s, std::mt19937_64& rng);

}  // namespace walksearch
