#pragma once

// Ground characteristic value a0(q) and the even pi-periodic Mathieu function
// ce0(theta, q) = sum_m A_2m cos(2 m theta), the lowest eigenpair of
// P^2 + 2q cos(2Q) on pi-periodic functions.
//
// Substituting the cosine series into y'' + (a - 2q cos 2theta) y = 0 gives
//   a A_0 = q A_2,
//   a A_2 = 4 A_2 + q (2 A_0 + A_4),
//   a A_2m = 4m^2 A_2m + q (A_2m-2 + A_2m+2),   m >= 2.
// With B_0 = sqrt(2) A_0 and B_m = A_2m the system is real symmetric
// tridiagonal: diagonal 4m^2, couplings sqrt(2) q between 0 and 1 and q
// elsewhere.

#include "phasest/core.hpp"
#include "phasest/tridiagonal.hpp"

namespace phasest {

struct MathieuGround {
  double q;
  double a0;
  Eigen::VectorXd cos_coeffs;  // A_0, A_2, ..., A_2M
  int truncation;              // M
  double residual;             // ||T B - a0 B|| / (||B|| max(1, ||T||))
};

/// Default truncation 20 + ceil(min(|q|, 24 |q|^{1/4})).
int mathieu_truncation(double q);

/// Recurrence matrix in the symmetrized B basis, indices 0..M.
SymTridiagonal<double> mathieu_matrix(double q, int M);

/// Minimum eigenvalue of P^2 + 2q cos(2Q) on even pi-periodic functions.
/// Computed at |q|. M = 0 selects mathieu_truncation(q).
double mathieu_a0(double q, int M = 0);

/// Full ground data. Coefficients have unit L2 norm of ce0 over one period
/// (length pi) and A_0 > 0. Negative q uses A_2m(-q) = (-1)^m A_2m(q).
/// Throws std::invalid_argument if 0 < M < 20.
MathieuGround mathieu_ground(double q, int M = 0);

/// A_0, ..., A_2M; see mathieu_ground.
Eigen::VectorXd ce0_coeffs(double q, int M = 0);

double ce0_eval(const MathieuGround& ground, double theta);
double ce0_eval(double q, double theta);

}  // namespace phasest
