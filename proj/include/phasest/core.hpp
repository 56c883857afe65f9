#pragma once

// States, error functions and the two risk functionals for covariant U(1)
// phase estimation with a multiplicity-free representation.
//
// A state is a coefficient vector (phi_n) over a contiguous index set
// S = {lo, ..., hi}; its Fourier transform is F[phi](t) = sum_n phi_n e^{i n t}.
// Under the covariant measurement the estimate has density
// |F[phi](t_hat - t)|^2 / 2pi, and the risk for a symmetric error function R
// is the Toeplitz quadratic form phi^* T phi with T_jk = r_|j-k|, where r_m
// are the Fourier cosine coefficients of R(0, .).

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace phasest {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when an iterative numerical procedure cannot produce a result
/// (bracket not found, no convergence).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contiguous integer index set {lo, ..., hi}.
class IndexSet {
 public:
  IndexSet(int lo, int hi);

  /// {0, 1, ..., n}
  static IndexSet zero_to(int n) { return {0, n}; }
  /// {-n, ..., n}
  static IndexSet symmetric(int n) { return {-n, n}; }

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  bool contains(int n) const noexcept { return n >= lo_ && n <= hi_; }
  IndexSet shifted(int c) const { return {lo_ + c, hi_ + c}; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int lo_;
  int hi_;
};

/// Unit vector sum_n phi_n e_n. Coefficients are stored in ascending n.
class PhaseState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws std::invalid_argument unless |coeffs| = |S| and the norm is 1
  /// within kNormTolerance.
  PhaseState(IndexSet index_set, Eigen::VectorXcd coeffs);

  /// Rescales `coeffs` to unit norm. Throws on a zero vector.
  static PhaseState normalized(IndexSet index_set, Eigen::VectorXcd coeffs);
  static PhaseState normalized(IndexSet index_set, const Eigen::VectorXd& coeffs);

  const IndexSet& index_set() const noexcept { return index_set_; }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return index_set_.size(); }

  /// phi_n, zero outside S.
  Complex coeff(int n) const noexcept;

  /// phi_n <- e^{i n alpha} phi_n (rigid rotation of the outcome density).
  PhaseState rotated(double alpha) const;
  /// S -> S + c with the same coefficient sequence.
  PhaseState shifted(int c) const;

 private:
  IndexSet index_set_;
  Eigen::VectorXcd coeffs_;
};

struct SinLoss {};

/// Failure indicator of the window |t_hat - t| < T/N.
struct IntervalLoss {
  double T;
  int N;
  double half_width() const noexcept { return T / N; }
};

/// Finitely many Fourier cosine coefficients r_0, ..., r_K.
struct CustomLoss {
  std::vector<double> coeffs;
};

/// Symmetric periodic error function R(0, .), R(0,t) = R(0,-t) = R(0,t+2pi n).
class ErrorFunction {
 public:
  using Kind = std::variant<SinLoss, IntervalLoss, CustomLoss>;

  static ErrorFunction sin_loss() { return ErrorFunction(SinLoss{}); }
  /// Requires T > 0, N >= 1 and T/N < pi.
  static ErrorFunction interval(double T, int N);
  /// Requires a nonempty finite coefficient list.
  static ErrorFunction custom(std::vector<double> coeffs);

  const Kind& kind() const noexcept { return kind_; }
  std::string name() const;

  /// r_0, ..., r_max_lag.
  std::vector<double> fourier_coeffs(int max_lag) const;

  /// R(0, delta). Closed form for the built-in kinds, cosine series
  /// r_0 + 2 sum_m r_m cos(m delta) for Custom.
  double value(double delta) const;

 private:
  explicit ErrorFunction(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Real symmetric Toeplitz matrix T_jk = r_|j-k| of a given dimension.
class ToeplitzForm {
 public:
  ToeplitzForm(std::vector<double> coeffs, std::size_t dimension);
  static ToeplitzForm from_error(const ErrorFunction& err, std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  /// r_m for 0 <= m < dimension (zero-padded).
  double coeff(std::size_t m) const noexcept { return m < coeffs_.size() ? coeffs_[m] : 0.0; }
  /// Number of leading lags that can be nonzero.
  std::size_t bandwidth() const noexcept;

  Eigen::MatrixXd matrix() const;

 private:
  std::vector<double> coeffs_;
  std::size_t dimension_;
};

/// Maps an angle to (-pi, pi]; an exact tie at pi goes to +pi.
double wrap_angle(double delta) noexcept;
/// Maps an angle to [0, 2pi).
double wrap_positive(double theta) noexcept;

/// F[phi](theta) = sum_n phi_n e^{i n theta}.
Complex fourier_eval(const PhaseState& state, double theta);

/// (r_0, ..., r_max_lag). Throws std::invalid_argument on max_lag < 0.
std::vector<double> error_fourier_coeffs(const ErrorFunction& err, int max_lag);

/// Smallest admissible trapezoid grid for risk_quadrature on this state.
std::size_t min_quadrature_grid(const PhaseState& state);

/// (1/2pi) int R(0,t)|F[phi](t)|^2 dt by the uniform trapezoid rule on the
/// circle. R enters through its cosine coefficients up to lag |S|-1, the
/// only lags that pair with |F|^2, so the rule is exact once
/// grid >= min_quadrature_grid(state).
double risk_quadrature(const PhaseState& state, const ErrorFunction& err, std::size_t grid = 4096);

/// phi^* T phi. Throws std::invalid_argument on a dimension mismatch.
double risk_toeplitz(const PhaseState& state, const ToeplitzForm& form);
double risk_toeplitz(const PhaseState& state, const ErrorFunction& err);

/// (1/2pi)|F[phi](theta_hat - theta_true)|^2.
double outcome_density(const PhaseState& state, double theta_true, double theta_hat);

}  // namespace phasest
