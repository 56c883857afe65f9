#include "phasest/mathieu.hpp"

#include <cmath>
#include <numbers>

namespace phasest {

int mathieu_truncation(double q) {
  const double aq = std::abs(q);
  return 20 + static_cast<int>(std::ceil(std::min(aq, 24.0 * std::pow(aq, 0.25))));
}

SymTridiagonal<double> mathieu_matrix(double q, int M) {
  SymTridiagonal<double> t;
  t.diag.resize(M + 1);
  t.off.resize(M);
  for (int m = 0; m <= M; ++m) t.diag[m] = 4.0 * m * m;
  for (int m = 0; m < M; ++m) t.off[m] = q;
  if (M > 0) t.off[0] = std::numbers::sqrt2 * q;
  return t;
}

double mathieu_a0(double q, int M) {
  if (!std::isfinite(q)) throw std::invalid_argument("mathieu_a0: q must be finite");
  if (q == 0.0) return 0.0;
  if (M == 0) M = mathieu_truncation(q);
  if (M < 20) throw std::invalid_argument("mathieu_a0: truncation must be >= 20");
  return kth_eigenvalue(mathieu_matrix(std::abs(q), M), 0);
}

MathieuGround mathieu_ground(double q, int M) {
  if (!std::isfinite(q)) throw std::invalid_argument("mathieu_ground: q must be finite");
  if (M == 0) M = mathieu_truncation(q);
  if (M < 20) throw std::invalid_argument("mathieu_ground: truncation must be >= 20");

  MathieuGround g;
  g.q = q;
  g.truncation = M;
  if (q == 0.0) {
    g.a0 = 0.0;
    g.cos_coeffs = Eigen::VectorXd::Zero(M + 1);
    g.cos_coeffs[0] = 1.0 / std::sqrt(kPi);
    g.residual = 0.0;
    return g;
  }

  const auto t = mathieu_matrix(std::abs(q), M);
  auto pair = min_eigenpair(t);
  g.a0 = pair.value;
  Eigen::VectorXd b = pair.vector;
  g.residual = (t.apply(b) - pair.value * b).norm() / (b.norm() * std::max(1.0, t.scale()));

  if (b[0] < 0.0) b = -b;
  b *= std::sqrt(2.0 / kPi) / b.norm();
  b[0] /= std::numbers::sqrt2;
  if (q < 0.0) {
    for (int m = 1; m <= M; m += 2) b[m] = -b[m];
  }
  g.cos_coeffs = std::move(b);
  return g;
}

Eigen::VectorXd ce0_coeffs(double q, int M) { return mathieu_ground(q, M).cos_coeffs; }

double ce0_eval(const MathieuGround& ground, double theta) {
  const auto& a = ground.cos_coeffs;
  double v = 0.0;
  // Clenshaw on cos(2 m theta).
  const double c = 2.0 * std::cos(2.0 * theta);
  double b1 = 0.0, b2 = 0.0;
  for (Eigen::Index m = a.size() - 1; m >= 1; --m) {
    const double b0 = a[m] + c * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  v = a[0] + b1 * (c / 2.0) - b2;
  return v;
}

double ce0_eval(double q, double theta) { return ce0_eval(mathieu_ground(q), theta); }

}  // namespace phasest
