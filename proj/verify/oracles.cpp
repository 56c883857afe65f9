#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace phasest::oracle {
namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

// Eigenvalues of the cyclic symmetric tridiagonal matrix below x: count of
// negative pivots in its LDL^T factorization. Elimination of column i only
// touches row i+1 and the last row (the corner fill-in).
int cyclic_count_below(const std::vector<double>& d, const std::vector<double>& e, double corner, double x) {
  const auto n = d.size();
  const double tiny = std::numeric_limits<double>::min();
  int count = 0;
  double cur = d[0] - x;
  double v = corner;
  double last = d[n - 1] - x;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    double piv = cur == 0.0 ? -tiny : cur;
    if (piv < 0.0) ++count;
    const double u = e[i];
    const double next = d[i + 1] - x - u * u / piv;
    const double base = (i + 1 == n - 2) ? e[n - 2] : 0.0;
    const double vnext = base - v * u / piv;
    last -= v * v / piv;
    v = vnext;
    cur = next;
  }
  double piv = cur == 0.0 ? -tiny : cur;
  if (piv < 0.0) ++count;
  last -= v * v / piv;
  if (last == 0.0) last = -tiny;
  if (last < 0.0) ++count;
  return count;
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double dense_min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense_min_eigenvalue: solver failed");
  return solver.eigenvalues()[0];
}

double mathieu_a0_grid_level(double q, int points) {
  if (points < 8) throw std::invalid_argument("mathieu_a0_grid_level: need at least 8 points");
  const auto n = static_cast<std::size_t>(points);
  const double h = std::numbers::pi / points;
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> d(n), e(n - 1, -inv_h2);
  double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = 2.0 * inv_h2 + 2.0 * q * std::cos(2.0 * h * static_cast<double>(i));
    lo = std::min(lo, d[i] - 2.0 * inv_h2);
    hi = std::max(hi, d[i] + 2.0 * inv_h2);
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cyclic_count_below(d, e, -inv_h2, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double mathieu_a0_grid(double q, int points) {
  const double l1 = mathieu_a0_grid_level(q, points);
  const double l2 = mathieu_a0_grid_level(q, points / 2);
  const double l3 = mathieu_a0_grid_level(q, points / 4);
  const double r1 = (4.0 * l1 - l2) / 3.0;
  const double r2 = (4.0 * l2 - l3) / 3.0;
  return (16.0 * r1 - r2) / 15.0;
}

PrimalKappa kappa_primal(double E, int M) {
  if (!(E > 0.0)) throw std::invalid_argument("kappa_primal: E must be positive");
  const int n = M + 1;
  // Orthonormal even basis 1, sqrt(2) cos(k theta).
  Eigen::MatrixXd cosq = Eigen::MatrixXd::Zero(n, n);
  cosq(0, 1) = cosq(1, 0) = 1.0 / std::numbers::sqrt2;
  for (int k = 1; k + 1 < n; ++k) cosq(k, k + 1) = cosq(k + 1, k) = 0.5;
  Eigen::VectorXd k2(n);
  for (int k = 0; k < n; ++k) k2[k] = static_cast<double>(k) * k;
  const Eigen::MatrixXd loss = Eigen::MatrixXd::Identity(n, n) - cosq;

  auto ground = [&](double s) {
    Eigen::MatrixXd lag = loss;
    lag.diagonal() += s * k2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lag);
    if (solver.info() != Eigen::Success) throw std::runtime_error("kappa_primal: solver failed");
    const Eigen::VectorXd v = solver.eigenvectors().col(0);
    return std::pair{v.dot(loss * v), v.cwiseAbs2().dot(k2)};
  };

  double lo = std::log(1e-9), hi = std::log(1e9);
  // energy decreases in s: keep energy(lo) > E >= energy(hi)
  for (int it = 0; it < 90; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ground(std::exp(mid)).second > E) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double s = std::exp(hi);
  const auto [risk, energy] = ground(s);
  return {risk, s, energy};
}

}  // namespace phasest::oracle
