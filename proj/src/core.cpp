#include "phasest/core.hpp"

#include <cmath>
#include <sstream>

namespace phasest {

IndexSet::IndexSet(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) {
    throw std::invalid_argument("IndexSet: lo must not exceed hi");
  }
}

PhaseState::PhaseState(IndexSet index_set, Eigen::VectorXcd coeffs)
    : index_set_(index_set), coeffs_(std::move(coeffs)) {
  if (static_cast<std::size_t>(coeffs_.size()) != index_set_.size()) {
    throw std::invalid_argument("PhaseState: coefficient count does not match index set");
  }
  if (!coeffs_.allFinite()) {
    throw std::invalid_argument("PhaseState: non-finite coefficient");
  }
  const double norm2 = coeffs_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PhaseState: coefficients are not normalized");
  }
}

PhaseState PhaseState::normalized(IndexSet index_set, Eigen::VectorXcd coeffs) {
  const double norm = coeffs.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("PhaseState: cannot normalize a zero or non-finite vector");
  }
  coeffs /= norm;
  return {index_set, std::move(coeffs)};
}

PhaseState PhaseState::normalized(IndexSet index_set, const Eigen::VectorXd& coeffs) {
  return normalized(index_set, Eigen::VectorXcd(coeffs.cast<Complex>()));
}

Complex PhaseState::coeff(int n) const noexcept {
  if (!index_set_.contains(n)) return {0.0, 0.0};
  return coeffs_[n - index_set_.lo()];
}

PhaseState PhaseState::rotated(double alpha) const {
  Eigen::VectorXcd out = coeffs_;
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    const int n = index_set_.lo() + static_cast<int>(j);
    out[j] *= std::polar(1.0, n * alpha);
  }
  return {index_set_, std::move(out)};
}

PhaseState PhaseState::shifted(int c) const { return {index_set_.shifted(c), coeffs_}; }

ErrorFunction ErrorFunction::interval(double T, int N) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("IntervalLoss: T must be positive");
  }
  if (N < 1) {
    throw std::invalid_argument("IntervalLoss: N must be at least 1");
  }
  if (T / N >= kPi) {
    throw std::invalid_argument("IntervalLoss: T/N >= pi, the window wraps the circle");
  }
  return ErrorFunction(IntervalLoss{T, N});
}

ErrorFunction ErrorFunction::custom(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("CustomLoss: at least one coefficient is required");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("CustomLoss: non-finite coefficient");
  }
  return ErrorFunction(CustomLoss{std::move(coeffs)});
}

std::string ErrorFunction::name() const {
  struct Visitor {
    std::string operator()(const SinLoss&) const { return "sin"; }
    std::string operator()(const IntervalLoss&) const { return "interval"; }
    std::string operator()(const CustomLoss&) const { return "custom"; }
  };
  return std::visit(Visitor{}, kind_);
}

std::vector<double> ErrorFunction::fourier_coeffs(int max_lag) const {
  if (max_lag < 0) throw std::invalid_argument("fourier_coeffs: max_lag must be >= 0");
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
  if (std::holds_alternative<SinLoss>(kind_)) {
    r[0] = 1.0;
    if (max_lag >= 1) r[1] = -0.5;
  } else if (const auto* iv = std::get_if<IntervalLoss>(&kind_)) {
    const double a = iv->half_width();
    r[0] = 1.0 - a / kPi;
    for (int m = 1; m <= max_lag; ++m) {
      r[static_cast<std::size_t>(m)] = -std::sin(m * a) / (kPi * m);
    }
  } else {
    const auto& c = std::get<CustomLoss>(kind_).coeffs;
    for (std::size_t m = 0; m < r.size() && m < c.size(); ++m) r[m] = c[m];
  }
  return r;
}

double ErrorFunction::value(double delta) const {
  if (std::holds_alternative<SinLoss>(kind_)) {
    return 1.0 - std::cos(delta);
  }
  if (const auto* iv = std::get_if<IntervalLoss>(&kind_)) {
    return std::abs(wrap_angle(delta)) >= iv->half_width() ? 1.0 : 0.0;
  }
  const auto& c = std::get<CustomLoss>(kind_).coeffs;
  double v = c[0];
  for (std::size_t m = 1; m < c.size(); ++m) v += 2.0 * c[m] * std::cos(static_cast<double>(m) * delta);
  return v;
}

ToeplitzForm::ToeplitzForm(std::vector<double> coeffs, std::size_t dimension)
    : coeffs_(std::move(coeffs)), dimension_(dimension) {
  if (dimension_ == 0) throw std::invalid_argument("ToeplitzForm: dimension must be >= 1");
  if (coeffs_.size() > dimension_) coeffs_.resize(dimension_);
}

ToeplitzForm ToeplitzForm::from_error(const ErrorFunction& err, std::size_t dimension) {
  if (dimension == 0) throw std::invalid_argument("ToeplitzForm: dimension must be >= 1");
  return {err.fourier_coeffs(static_cast<int>(dimension) - 1), dimension};
}

std::size_t ToeplitzForm::bandwidth() const noexcept {
  std::size_t b = coeffs_.size();
  while (b > 1 && coeffs_[b - 1] == 0.0) --b;
  return b;
}

Eigen::MatrixXd ToeplitzForm::matrix() const {
  const auto n = static_cast<Eigen::Index>(dimension_);
  Eigen::MatrixXd t(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      t(j, k) = coeff(static_cast<std::size_t>(std::abs(j - k)));
    }
  }
  return t;
}

double wrap_angle(double delta) noexcept {
  double w = std::remainder(delta, kTwoPi);  // [-pi, pi]
  if (w <= -kPi) w += kTwoPi;
  return w;
}

double wrap_positive(double theta) noexcept {
  double w = std::fmod(theta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

Complex fourier_eval(const PhaseState& state, double theta) {
  // Horner in e^{i theta}, then the e^{i lo theta} prefactor.
  const Complex z = std::polar(1.0, theta);
  const auto& c = state.coeffs();
  Complex acc{0.0, 0.0};
  for (Eigen::Index j = c.size() - 1; j >= 0; --j) acc = acc * z + c[j];
  return acc * std::polar(1.0, state.index_set().lo() * theta);
}

std::vector<double> error_fourier_coeffs(const ErrorFunction& err, int max_lag) {
  return err.fourier_coeffs(max_lag);
}

std::size_t min_quadrature_grid(const PhaseState& state) {
  const std::size_t bw = state.size() - 1;
  return std::max<std::size_t>(4, 4 * (bw + bw));
}

double risk_quadrature(const PhaseState& state, const ErrorFunction& err, std::size_t grid) {
  if (grid < min_quadrature_grid(state)) {
    std::ostringstream msg;
    msg << "risk_quadrature: grid " << grid << " below required " << min_quadrature_grid(state);
    throw std::invalid_argument(msg.str());
  }
  const int lags = static_cast<int>(state.size()) - 1;
  const auto r = err.fourier_coeffs(lags);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(grid);
    double rv = r[0];
    for (int m = 1; m <= lags; ++m) rv += 2.0 * r[static_cast<std::size_t>(m)] * std::cos(m * t);
    sum += rv * std::norm(fourier_eval(state, t));
  }
  return sum / static_cast<double>(grid);
}

double risk_toeplitz(const PhaseState& state, const ToeplitzForm& form) {
  if (form.dimension() != state.size()) {
    throw std::invalid_argument("risk_toeplitz: form dimension does not match state");
  }
  const auto& phi = state.coeffs();
  const auto n = phi.size();
  // sum_{j,k} conj(phi_j) r_|j-k| phi_k = r_0 |phi|^2 + 2 sum_m r_m Re sum_j conj(phi_j) phi_{j+m}
  double total = form.coeff(0) * phi.squaredNorm();
  const auto band = static_cast<Eigen::Index>(form.bandwidth());
  for (Eigen::Index m = 1; m < band && m < n; ++m) {
    const double rm = form.coeff(static_cast<std::size_t>(m));
    if (rm == 0.0) continue;
    const Complex lag = phi.head(n - m).dot(phi.tail(n - m));  // conj(head) . tail
    total += 2.0 * rm * lag.real();
  }
  return total;
}

double risk_toeplitz(const PhaseState& state, const ErrorFunction& err) {
  return risk_toeplitz(state, ToeplitzForm::from_error(err, state.size()));
}

double outcome_density(const PhaseState& state, double theta_true, double theta_hat) {
  return std::norm(fourier_eval(state, theta_hat - theta_true)) / kTwoPi;
}

}  // namespace phasest
