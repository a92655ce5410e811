#pragma once

#include <vector>

#include "walksearch/linalg.hpp"
#include "walksearch/model.hpp"

namespace walksearch::rw_discrete {

/// Column-stochastic hop matrix: the marked column is the standard basis
/// vector (absorption), every other column has zero diagonal and 1/(n-1)
/// off-diagonal.
struct TransitionMatrix {
  linalg::RealMatrix matrix;
};

/// Coefficients along the marked vertex and the uniform mix of unmarked
/// vertices; the pair partitions the total probability.
struct Subspace2DClassical {
  double marked;
  double unmarked;
};

TransitionMatrix build_transition(const CompleteGraphInstance& g);

/// Repeated hop of the uniform start, sampled at every step 0..steps.
EvolutionRecord evolve_full(const CompleteGraphInstance& g, int steps);

/// Same dynamics reduced to the two-dimensional invariant subspace;
/// one entry per step 0..steps.
std::vector<Subspace2DClassical> evolve_subspace(const CompleteGraphInstance& g, int steps);

/// 1 - ((n-1)/n) ((n-2)/(n-1))^t. Integer t counts walk steps; real t is the
/// continuous interpolation used when inverting for runtimes.
double success_closed_form(int n, double t);

/// Real-valued step count at which the success probability reaches 1 - eps;
/// ceiling it guarantees the target. Requires n >= 3 (at n = 2 a single step
/// already succeeds with certainty) and 0 < eps <= (n-1)/n.
double runtime_for_epsilon(int n, double eps);

/// Large-n runtime n ln(1/eps).
double asymptotic_runtime(int n, double eps);

}  // namespace walksearch::rw_discrete
