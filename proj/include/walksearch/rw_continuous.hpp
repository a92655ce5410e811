#pragma once

#include "walksearch/linalg.hpp"
#include "walksearch/model.hpp"
#include "walksearch/rw_discrete.hpp"

namespace walksearch::rw_continuous {

/// Discrete Laplacian of the complete graph with the marked column zeroed
/// (the walker never leaves the marked vertex). Every column sums to zero.
/// The evolution divides by norm, which is pinned to n: the paper's closed
/// forms are stated for e^{Lt/N}, and the measured largest singular value of
/// this (non-symmetric) matrix is available separately as a diagnostic.
struct AbsorbingLaplacian {
  linalg::RealMatrix matrix;
  double norm;
};

AbsorbingLaplacian build_absorbing_laplacian(const CompleteGraphInstance& g);

/// Largest singular value of the absorbing Laplacian, computed numerically.
/// Diagnostic only; the evolution always uses norm = n.
double measured_spectral_norm(const AbsorbingLaplacian& lap);

/// e^{Lt/n} applied to the uniform start, sampled on the dt grid with a
/// final sample pinned at t_max.
EvolutionRecord evolve_full(const CompleteGraphInstance& g, double t_max, double dt);

/// The same dynamics reduced to two dimensions and evaluated at time t.
rw_discrete::Subspace2DClassical evolve_subspace(const CompleteGraphInstance& g, double t);

/// 1 - ((n-1)/n) e^{-t/n}.
double success_closed_form(int n, double t);

/// Time at which the success probability reaches 1 - eps:
/// n ln(((n-1)/n)/eps). Requires 0 < eps <= (n-1)/n.
double runtime_for_epsilon(int n, double eps);

/// Large-n runtime n ln(1/eps); identical to the discrete-time formula.
double asymptotic_runtime(int n, double eps);

/// Default sampling interval n/100: at least 100 points per decay constant.
double default_dt(int n);

}  // namespace walksearch::rw_continuous
