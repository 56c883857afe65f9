#pragma once

// Optimal input states on a finite index set: the minimum eigenpair of the
// error-function Toeplitz matrix.

#include <vector>

#include "phasest/core.hpp"

namespace phasest {

struct FiniteOptimum {
  IndexSet index_set;
  double risk;            // minimum eigenvalue of T
  PhaseState state;       // unit eigenvector, largest entry real positive
  double eigen_residual;  // ||T phi - risk phi||
  double eigen_gap;       // second eigenvalue minus risk; 0 for |S| = 1
};

/// Minimum risk over all states on `index_set`. Three-term forms (the sin^2
/// loss) use the tridiagonal bisection solver, everything else the dense
/// symmetric eigensolver.
FiniteOptimum min_risk_state(const IndexSet& index_set, const ErrorFunction& err);

/// Coefficients proportional to sin((j+1) pi / (m+1)), j = 0..m-1.
PhaseState sine_window_state(const IndexSet& index_set);

/// Exact sin^2-loss optimum on {0..n}: 2 sin^2(pi / (2(n+2))).
double sin_loss_optimum_closed_form(int n);

/// The alternative closed form 2 sin^2(pi / (2(n+1))), which does not match
/// the eigenvalue of the (n+1)-dimensional form. Kept for reporting.
double sin_loss_optimum_shifted_form(int n);

struct HeisenbergRow {
  int n;
  double risk;
  double scaled;  // n^2 * risk
};

/// Minimum sin^2 risk on {0..n} for each n. Throws on n < 1.
std::vector<HeisenbergRow> heisenberg_table(const std::vector<int>& n_values);

/// N^2 times the sin^2 risk of a state on {-N..N}. With the half-period
/// cosine window the state samples cos(pi x / 2) at x = j/N; otherwise the
/// eigen-optimal state is used. Tends to pi^2/8. Requires N >= 8.
double continuum_limit_check(int N, bool half_period_cosine = true);

/// Makes the largest-magnitude entry real and positive (first index wins
/// among equal magnitudes).
Eigen::VectorXcd fix_phase(Eigen::VectorXcd v);

}  // namespace phasest
