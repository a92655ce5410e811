#pragma once

#include <array>
#include <string>

namespace walksearch::analytics {

/// Gap e^{-t/n} - ((n-2)/(n-1))^t between the continuous- and discrete-time
/// random-walk success curves, evaluated cancellation-free.
double delta(int n, double t);

/// Closed-form time maximizing delta: n ln(n b) / (n b - 1) with
/// b = ln((n-1)/(n-2)).
double delta_argmax(int n);

struct DeltaReport {
  int n;
  double t_star;
  double delta_max;
  double asymptote;  // 3 / (2 e n)
};

/// delta at its closed-form argmax, paired with the large-n asymptote.
DeltaReport delta_max(int n);

struct QuantumComparison {
  double discrete;    // (1/2) sin^2(sqrt(2) t / sqrt(n))
  double continuous;  // sin^2(t / sqrt(n))
};

/// The two large-n quantum success curves at (n, t).
QuantumComparison quantum_asymptotic_comparison(int n, double t);

/// Numeric cell when available, otherwise an explanatory marker.
struct SummaryCell {
  bool has_value = false;
  double value = 0.0;
  std::string label;

  static SummaryCell of(double v) { return {true, v, {}}; }
  static SummaryCell marker(std::string text) { return {false, 0.0, std::move(text)}; }
};

struct SummaryColumn {
  std::string walk;
  SummaryCell probability;             // success reached at the runtime below
  SummaryCell runtime;
  SummaryCell asymptotic_probability;
  SummaryCell asymptotic_runtime;
  std::string overall_order;
};

/// One column per walk, in the fixed order rw-discrete, rw-continuous,
/// qw-discrete, qw-continuous. Numeric cells delegate to the owning module's
/// operations; nothing is recomputed here.
struct SummaryTable {
  int n;
  double epsilon;
  std::array<SummaryColumn, 4> columns;
};

SummaryTable summary_table(int n, double eps);

}  // namespace walksearch::analytics
