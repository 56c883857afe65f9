#include "phasest/prolate.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "phasest/finite_opt.hpp"
#include "phasest/gauss_legendre.hpp"

namespace phasest {
namespace {

void check_window(double T, int N) {
  if (N < 1) throw std::invalid_argument("window: N must be >= 1");
  if (!(T > 0.0) || !(T / N < kPi)) throw std::invalid_argument("window: require 0 < T/N < pi");
}

struct Nystrom {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // columns match values
  QuadratureRule<double> rule;
};

Nystrom nystrom(double T, int order) {
  Nystrom out{{}, {}, gauss_legendre<double>(order)};
  const auto& x = out.rule.nodes;
  const Eigen::VectorXd sw = out.rule.weights.cwiseSqrt();
  Eigen::MatrixXd k(order, order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = sw[i] * sinc_kernel(T, x[i], x[j]) * sw[j];
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k);
  if (solver.info() != Eigen::Success) throw NumericalError("prolate_spectrum: eigensolver failed");
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

}  // namespace

double sinc_kernel(double T, double x, double y) {
  const double d = x - y;
  const double u = T * d;
  if (std::abs(u) < 1e-8) {
    // sin(u)/u = 1 - u^2/6 + O(u^4)
    return T / kPi * (1.0 - u * u / 6.0);
  }
  return std::sin(u) / (kPi * d);
}

ProlateSpectrum prolate_spectrum(double T, int quad_order, int k) {
  if (!(T > 0.0)) throw std::invalid_argument("prolate_spectrum: T must be positive");
  if (quad_order < 40) throw std::invalid_argument("prolate_spectrum: quad_order must be >= 40");
  if (k < 1 || k > quad_order) {
    throw std::invalid_argument("prolate_spectrum: k must lie in [1, quad_order]");
  }
  const Nystrom fine = nystrom(T, quad_order);
  const Nystrom coarse = nystrom(T, quad_order / 2);

  ProlateSpectrum out;
  out.T = T;
  out.quad_order = quad_order;
  out.eigenvalues = fine.values.head(k);
  out.nodes = fine.rule.nodes;
  out.weights = fine.rule.weights;
  out.refinement_error = std::abs(fine.values[0] - coarse.values[0]);

  // psi(x_i) = v_i / sqrt(w_i); sum_i w_i psi_i^2 = |v|^2 = 1.
  Eigen::VectorXd psi = fine.vectors.col(0).cwiseQuotient(fine.rule.weights.cwiseSqrt());
  Eigen::Index center = 0;
  out.nodes.cwiseAbs().minCoeff(&center);
  if (psi[center] < 0.0) psi = -psi;
  out.eigenfunction_samples = std::move(psi);
  return out;
}

double lambda_asymptotic(double T) {
  if (!(T > 3.0 / 32.0)) throw std::invalid_argument("lambda_asymptotic: T must exceed 3/32");
  return 1.0 - 4.0 * std::sqrt(kPi * T) * std::exp(-2.0 * T) * (1.0 - 3.0 / (32.0 * T));
}

Eigen::MatrixXd interval_matrix(double T, int N, std::size_t dim) {
  check_window(T, N);
  const double a = T / N;
  const auto n = static_cast<Eigen::Index>(dim);
  // Toeplitz: fill the first column once.
  Eigen::VectorXd col(n);
  col[0] = a / kPi;
  for (Eigen::Index m = 1; m < n; ++m) col[m] = std::sin(static_cast<double>(m) * a) / (kPi * static_cast<double>(m));
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) A(j, k) = col[std::abs(j - k)];
  }
  return A;
}

PhaseState dpss_state(int N, double T) {
  check_window(T, N);
  const auto dim = static_cast<std::size_t>(2 * N + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(interval_matrix(T, N, dim));
  if (solver.info() != Eigen::Success) throw NumericalError("dpss_state: eigensolver failed");
  const Eigen::VectorXd top = solver.eigenvectors().col(static_cast<Eigen::Index>(dim) - 1);
  Eigen::VectorXcd c = fix_phase(top.cast<Complex>());
  c.normalize();
  return {IndexSet::symmetric(N), c};
}

double interval_success_prob(const PhaseState& state, double T, int N) {
  const Eigen::MatrixXd A = interval_matrix(T, N, state.size());
  const auto& phi = state.coeffs();
  return phi.dot(A.cast<Complex>() * phi).real();
}

}  // namespace phasest
