#pragma once

#include "walksearch/linalg.hpp"
#include "walksearch/model.hpp"

namespace walksearch::qw_continuous {

/// H = -gamma L - |a><a| where L is the Laplacian of the full complete graph
/// (no absorption; absorption would break Hermiticity). Real symmetric.
struct SearchHamiltonian {
  linalg::RealMatrix matrix;
  double gamma;
};

/// The jumping rate 1/n at which the walk transfers all amplitude to the
/// marked vertex.
double critical_gamma(int n);

SearchHamiltonian build_hamiltonian(const CompleteGraphInstance& g, double gamma);

/// H reduced to the span of the marked vertex and the uniform unmarked mix.
linalg::RealMatrix subspace_hamiltonian(int n, double gamma);

/// Schroedinger evolution e^{-iHt} of the uniform superposition, computed
/// from the eigendecomposition of H so each sample is an exact unitary
/// image. Success is the marked-vertex probability, conserved the squared
/// norm. The closed forms below assume gamma = 1/n; other rates evolve fine
/// but do not match them.
EvolutionRecord evolve_full(const CompleteGraphInstance& g, double gamma, double t_max,
                            double dt);

/// The evolved state e^{-iHt} |uniform> at a single time.
VertexAmplitudeState state_at(const CompleteGraphInstance& g, double gamma, double t);

struct Subspace2DQuantum {
  cplx marked;
  cplx unmarked;
};

/// Two-dimensional evolution at time t with gamma = 1/n.
Subspace2DQuantum evolve_subspace(const CompleteGraphInstance& g, double t);

/// sin^2(t/sqrt(n)) + (1/n) cos^2(t/sqrt(n)).
double success_closed_form(int n, double t);

/// pi sqrt(n) / 2, the first time the success probability reaches 1.
double runtime(int n);

/// Default sampling interval: 200 samples per period pi sqrt(n).
double default_dt(int n);

}  // namespace walksearch::qw_continuous
