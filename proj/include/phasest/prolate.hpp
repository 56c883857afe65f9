#pragma once

// Time-limiting/band-limiting operator on [-1, 1] with band [-T, T], i.e. the
// integral operator with kernel sin(T(x-y)) / (pi (x-y)), and its discrete
// counterpart on {-N..N} (discrete prolate spheroidal sequences).

#include "phasest/core.hpp"

namespace phasest {

struct ProlateSpectrum {
  double T;
  int quad_order;
  Eigen::VectorXd eigenvalues;            // descending, top k
  Eigen::VectorXd nodes;                  // Gauss-Legendre nodes on [-1, 1]
  Eigen::VectorXd weights;
  Eigen::VectorXd eigenfunction_samples;  // top eigenfunction at the nodes
  double refinement_error;                // |lambda_0(order) - lambda_0(order / 2)|

  double lambda() const { return eigenvalues[0]; }
};

/// sin(T(x-y)) / (pi (x-y)), T/pi on the diagonal.
double sinc_kernel(double T, double x, double y);

/// Nystrom discretization with Gauss-Legendre nodes, symmetrized as
/// W^{1/2} K W^{1/2}. The eigenfunction has unit weighted L2 norm and is
/// positive at the node nearest 0.
/// Throws std::invalid_argument if T <= 0, quad_order < 40 or k outside
/// [1, quad_order].
ProlateSpectrum prolate_spectrum(double T, int quad_order = 80, int k = 1);

/// 1 - 4 sqrt(pi T) e^{-2T} (1 - 3/(32T)). Requires T > 3/32.
double lambda_asymptotic(double T);

/// A_jk = sin((j-k)a) / (pi (j-k)), diagonal a/pi, a = T/N, on `dim` indices.
Eigen::MatrixXd interval_matrix(double T, int N, std::size_t dim);

/// Top eigenvector of interval_matrix on {-N..N}. Requires N >= 1 and
/// 0 < T/N < pi.
PhaseState dpss_state(int N, double T);

/// (1/2pi) int_{-T/N}^{T/N} |F[phi]|^2, as phi^* A phi.
double interval_success_prob(const PhaseState& state, double T, int N);

}  // namespace phasest
