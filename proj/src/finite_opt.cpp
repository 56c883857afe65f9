#include "phasest/finite_opt.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "phasest/tridiagonal.hpp"

namespace phasest {

Eigen::VectorXcd fix_phase(Eigen::VectorXcd v) {
  if (v.size() == 0) return v;
  const double vmax = v.cwiseAbs().maxCoeff();
  if (vmax == 0.0) return v;
  Eigen::Index pick = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= vmax * (1.0 - 1e-10)) {
      pick = i;
      break;
    }
  }
  const Complex phase = v[pick] / std::abs(v[pick]);
  v *= std::conj(phase);
  v[pick] = std::abs(v[pick]);
  return v;
}

FiniteOptimum min_risk_state(const IndexSet& index_set, const ErrorFunction& err) {
  const auto dim = index_set.size();
  const ToeplitzForm form = ToeplitzForm::from_error(err, dim);
  const auto n = static_cast<Eigen::Index>(dim);

  double risk = 0.0;
  double gap = 0.0;
  Eigen::VectorXd vec;
  if (form.bandwidth() <= 2) {
    SymTridiagonal<double> t;
    t.diag = Eigen::VectorXd::Constant(n, form.coeff(0));
    t.off = Eigen::VectorXd::Constant(n - 1, form.coeff(1));
    auto pair = min_eigenpair(t);
    risk = pair.value;
    gap = pair.gap;
    vec = std::move(pair.vector);
  } else {
    const Eigen::MatrixXd mat = form.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("min_risk_state: dense eigensolver failed");
    }
    risk = solver.eigenvalues()[0];
    gap = n > 1 ? solver.eigenvalues()[1] - risk : 0.0;
    vec = solver.eigenvectors().col(0);
  }

  Eigen::VectorXcd coeffs = fix_phase(vec.cast<Complex>());
  coeffs.normalize();
  PhaseState state(index_set, coeffs);
  const Eigen::VectorXd real_part = coeffs.real();
  const double residual = (form.matrix() * real_part - risk * real_part).norm();
  return {index_set, risk, std::move(state), residual, gap};
}

PhaseState sine_window_state(const IndexSet& index_set) {
  const auto m = static_cast<Eigen::Index>(index_set.size());
  Eigen::VectorXd c(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    c[j] = std::sin(static_cast<double>(j + 1) * kPi / static_cast<double>(m + 1));
  }
  return PhaseState::normalized(index_set, c);
}

double sin_loss_optimum_closed_form(int n) {
  const double s = std::sin(kPi / (2.0 * (n + 2)));
  return 2.0 * s * s;
}

double sin_loss_optimum_shifted_form(int n) {
  const double s = std::sin(kPi / (2.0 * (n + 1)));
  return 2.0 * s * s;
}

std::vector<HeisenbergRow> heisenberg_table(const std::vector<int>& n_values) {
  std::vector<HeisenbergRow> rows;
  rows.reserve(n_values.size());
  const auto loss = ErrorFunction::sin_loss();
  for (int n : n_values) {
    if (n < 1) throw std::invalid_argument("heisenberg_table: n must be >= 1");
    const double risk = min_risk_state(IndexSet::zero_to(n), loss).risk;
    rows.push_back({n, risk, static_cast<double>(n) * n * risk});
  }
  return rows;
}

double continuum_limit_check(int N, bool half_period_cosine) {
  if (N < 8) throw std::invalid_argument("continuum_limit_check: N must be >= 8");
  const auto S = IndexSet::symmetric(N);
  const auto loss = ErrorFunction::sin_loss();
  double risk = 0.0;
  if (half_period_cosine) {
    Eigen::VectorXd c(2 * N + 1);
    for (int j = -N; j <= N; ++j) c[j + N] = std::cos(kPi * j / (2.0 * N));
    risk = risk_toeplitz(PhaseState::normalized(S, c), loss);
  } else {
    risk = min_risk_state(S, loss).risk;
  }
  return static_cast<double>(N) * N * risk;
}

}  // namespace phasest
