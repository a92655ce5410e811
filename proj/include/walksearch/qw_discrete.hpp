#pragma once

#include <vector>

#include "walksearch/linalg.hpp"
#include "walksearch/model.hpp"

namespace walksearch::qw_discrete {

/// The three coined-walk operators as implicit maps on arc states. One step
/// costs O(n^2); the explicit n(n-1) x n(n-1) matrices below exist for
/// validation at small n.
class CoinedOperators {
 public:
  explicit CoinedOperators(const CompleteGraphInstance& g);

  /// Oracle Q: reflection about the marked vertex's uniform coin state.
  ArcState oracle(const ArcState& s) const;

  /// Phase oracle Q': negates every amplitude at the marked vertex. Agrees
  /// with Q exactly when those amplitudes are all equal.
  ArcState sign_flip_oracle(const ArcState& s) const;

  /// Grover diffusion coin: inverts each amplitude about the average
  /// amplitude at its vertex.
  ArcState coin(const ArcState& s) const;

  /// Flip-flop shift: (i -> j) becomes (j -> i).
  ArcState shift(const ArcState& s) const;

  int n() const { return n_; }
  int marked() const { return marked_; }

 private:
  int n_;
  int marked_;
};

CoinedOperators build_operators(const CompleteGraphInstance& g);

/// One step of the search: shift(coin(oracle(s))).
ArcState step(const ArcState& s, const CoinedOperators& ops);

linalg::RealMatrix oracle_matrix(const CompleteGraphInstance& g);
linalg::RealMatrix coin_matrix(const CompleteGraphInstance& g);
linalg::RealMatrix shift_matrix(const CompleteGraphInstance& g);

/// Full arc-space evolution from the uniform superposition; success is the
/// marked-vertex probability, conserved is the squared norm.
EvolutionRecord evolve_full(const CompleteGraphInstance& g, int steps);

/// Coefficients in the invariant 3D basis: arcs leaving the marked vertex,
/// arcs entering it, and arcs between unmarked vertices. phi is the rotation
/// angle per step, sin(phi) = sqrt(2n-3)/(n-1).
struct Subspace3D {
  double from_marked;
  double to_marked;
  double between_unmarked;
  double phi;
};

std::vector<Subspace3D> evolve_subspace(const CompleteGraphInstance& g, int steps);

/// The 3x3 search operator in the invariant basis.
linalg::RealMatrix subspace_operator(int n);

/// Rotation angle per step.
double step_angle(int n);

/// Marked-vertex probability after an integer number of steps.
double success_closed_form(int n, long long t);

/// Probability carried by arcs pointing at the marked vertex; asymptotically
/// equal to the success probability, which is why measuring the direction
/// doubles the yield.
double ba_probability_closed_form(int n, long long t);

/// Nearest even integer to pi/(2 phi); exact odd midpoints round upward.
long long optimal_steps(int n);

/// Leading term n (sqrt(2n)+1)^2 / (2n-3)^2 of the peak success probability.
double success_at_optimum(int n);

struct RepetitionPlan {
  long long runs;
  double total_steps;
};

/// ceil(log2(1/eps)) runs reach success 1 - eps; total_steps multiplies by
/// optimal_steps(n).
RepetitionPlan repetition_plan(int n, double eps);

}  // namespace walksearch::qw_discrete
