#include "phasest/energy.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "phasest/mathieu.hpp"

namespace phasest {
namespace {

constexpr double kMinS = 1e-12;
constexpr double kMaxS = 1e12;

double dual_objective(double s, double E) { return gamma(s) - s * E; }

// Forward difference quotient of the dual objective, relative step.
double dual_slope(double s, double E) {
  const double h = 1e-4 * s;
  return (dual_objective(s + h, E) - dual_objective(s, E)) / h;
}

}  // namespace

EnergySpec::EnergySpec(double e) : E(e) {
  if (!(e > 0.0) || !std::isfinite(e)) throw std::invalid_argument("EnergySpec: E must be positive");
}

double gamma(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("gamma: s must be positive");
  return s * mathieu_a0(2.0 / s) / 4.0 + 1.0;
}

double gamma_slope(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("gamma_slope: s must be positive");
  const auto g = mathieu_ground(2.0 / s);
  const auto& a = g.cos_coeffs;
  // F(theta) = sum_m (+-)A_2m cos(m theta): weight of mode +-m is A_2m^2 / 2.
  double num = 0.0;
  double den = 2.0 * a[0] * a[0];
  for (Eigen::Index m = 1; m < a.size(); ++m) {
    const double w = a[m] * a[m];
    num += static_cast<double>(m * m) * w;
    den += w;
  }
  return num / den;
}

double gamma_variational(double s, int M) {
  if (!(s > 0.0)) throw std::invalid_argument("gamma_variational: s must be positive");
  if (M < 30) throw std::invalid_argument("gamma_variational: M must be >= 30");
  const int n = 2 * M + 1;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub = Eigen::VectorXd::Constant(n - 1, -0.5);
  for (int k = -M; k <= M; ++k) diag[k + M] = 1.0 + s * static_cast<double>(k) * k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("gamma_variational: eigensolver failed");
  return solver.eigenvalues()[0];
}

TradeoffPoint kappa(const EnergySpec& spec) { return kappa(spec.E); }

TradeoffPoint kappa(double E) {
  if (!(E > 0.0) || !std::isfinite(E)) throw std::invalid_argument("kappa: E must be positive");

  // Bracket: the objective is concave in s, so find s_hi where it already
  // decreases and s_lo where it still increases.
  double s_hi = 1.0;
  while (dual_slope(s_hi, E) >= 0.0) {
    s_hi *= 10.0;
    if (s_hi > kMaxS) throw NumericalError("kappa: bracket_failure (no decrease below s = 1e12)");
  }
  double s_lo = s_hi / 10.0;
  while (dual_slope(s_lo, E) <= 0.0) {
    s_lo /= 10.0;
    if (s_lo < kMinS) throw NumericalError("kappa: bracket_failure (no increase above s = 1e-12)");
  }

  // Golden section in u = log s.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::log(s_lo), b = std::log(s_hi);
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = dual_objective(std::exp(c), E), fd = dual_objective(std::exp(d), E);
  while (b - a > 1e-9) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = dual_objective(std::exp(c), E);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = dual_objective(std::exp(d), E);
    }
  }
  const double s_golden = std::exp((a + b) / 2.0);

  // Polish on gamma'(s) = E. gamma' is decreasing in s; keep lo with
  // slope > E and hi with slope <= E.
  double lo = s_golden, hi = s_golden;
  for (int i = 0; gamma_slope(lo) <= E; ++i) {
    lo /= 1.01;
    if (i > 2000 || lo < kMinS) throw NumericalError("kappa: polishing bracket failure");
  }
  for (int i = 0; gamma_slope(hi) > E; ++i) {
    hi *= 1.01;
    if (i > 2000 || hi > kMaxS) throw NumericalError("kappa: polishing bracket failure");
  }
  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (gamma_slope(mid) > E) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  TradeoffPoint tp;
  tp.E = E;
  tp.s_star = hi;
  tp.gamma_at_s = gamma(hi);
  tp.kappa = tp.gamma_at_s - tp.s_star * E;
  return tp;
}

double kappa_asymptote(double E) { return 1.0 / (8.0 * E) - 1.0 / (128.0 * E * E); }

double gamma_asymptote(double s) { return std::sqrt(s / 2.0) - s / 16.0; }

PhaseState optimal_energy_state(double E, int K) {
  if (K < 0) throw std::invalid_argument("optimal_energy_state: K must be >= 0");
  const TradeoffPoint tp = kappa(E);
  const auto g = mathieu_ground(-2.0 / tp.s_star);
  const auto& a = g.cos_coeffs;
  const int M = g.truncation;

  if (K == 0) {
    double total = a[0] * a[0];
    for (int m = 1; m <= M; ++m) total += a[m] * a[m] / 2.0;
    double tail = total - a[0] * a[0];
    K = M;
    for (int k = 1; k <= M; ++k) {
      tail -= a[k] * a[k] / 2.0;
      if (tail < 1e-12 * total) {
        K = k;
        break;
      }
    }
  }

  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * K + 1);
  c[K] = a[0];
  for (int m = 1; m <= std::min(K, M); ++m) {
    c[K + m] = a[m] / 2.0;
    c[K - m] = a[m] / 2.0;
  }
  return PhaseState::normalized(IndexSet::symmetric(K), c);
}

double mean_energy(const PhaseState& state) {
  double e = 0.0;
  const auto& c = state.coeffs();
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    const double n = state.index_set().lo() + static_cast<double>(j);
    e += n * n * std::norm(c[j]);
  }
  return e;
}

}  // namespace phasest
