#pragma once

// Reference computations that take a different route from the library:
// different discretizations, different solvers, no shared formulas beyond
// the problem definitions. Used by the tests and by `verify`.

#include <functional>

#include <Eigen/Dense>

namespace phasest::oracle {

/// Adaptive Simpson quadrature of f on [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 50);

/// Smallest eigenvalue of a dense symmetric matrix (Eigen QR-based solver).
double dense_min_eigenvalue(const Eigen::MatrixXd& m);

/// Ground eigenvalue of -d^2/dtheta^2 + 2q cos(2 theta) on pi-periodic
/// functions from a second-order finite-difference grid with `points`
/// nodes. Each level is solved by Sylvester-inertia bisection on the cyclic
/// tridiagonal matrix; levels points, points/2, points/4 are combined by
/// Richardson extrapolation in h^2. No parity restriction.
double mathieu_a0_grid(double q, int points = 2048);

/// Single grid level, no extrapolation.
double mathieu_a0_grid_level(double q, int points);

struct PrimalKappa {
  double kappa;    // <1 - cos Q> at the constrained optimum
  double s;        // multiplier at which <P^2> = E
  double energy;   // <P^2> reached
};

/// Minimum of <1 - cos Q> over even states in span{1, cos k theta, k <= M}
/// with <P^2> <= E: ground states of the Lagrangian 1 - cos Q + s P^2 (dense
/// solver) with s bisected until the energy constraint is active.
PrimalKappa kappa_primal(double E, int M = 160);

}  // namespace phasest::oracle
