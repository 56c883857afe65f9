#pragma once

// Symmetric tridiagonal eigenproblems by Sturm-count bisection and inverse
// iteration. Used wherever the operator is a three-term recurrence: the sin^2
// loss Toeplitz form and the Mathieu cosine-basis matrix.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <Eigen/Core>

namespace phasest {

template <typename Scalar>
struct SymTridiagonal {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Vector diag;  // n entries
  Vector off;   // n-1 entries, off[i] couples i and i+1

  Eigen::Index size() const { return diag.size(); }

  Vector apply(const Vector& x) const {
    Vector y = diag.cwiseProduct(x);
    const Eigen::Index n = size();
    if (n > 1) {
      y.head(n - 1) += off.cwiseProduct(x.tail(n - 1));
      y.tail(n - 1) += off.cwiseProduct(x.head(n - 1));
    }
    return y;
  }

  /// Gershgorin enclosure of the spectrum.
  std::pair<Scalar, Scalar> gershgorin() const {
    using std::abs;
    const Eigen::Index n = size();
    Scalar lo = std::numeric_limits<Scalar>::max();
    Scalar hi = std::numeric_limits<Scalar>::lowest();
    for (Eigen::Index i = 0; i < n; ++i) {
      Scalar r = 0;
      if (i > 0) r += abs(off[i - 1]);
      if (i + 1 < n) r += abs(off[i]);
      lo = std::min(lo, diag[i] - r);
      hi = std::max(hi, diag[i] + r);
    }
    return {lo, hi};
  }

  Scalar scale() const {
    auto [lo, hi] = gershgorin();
    using std::abs;
    return std::max(abs(lo), abs(hi));
  }
};

/// Number of eigenvalues strictly below x (Sylvester inertia of T - xI).
template <typename Scalar>
Eigen::Index count_below(const SymTridiagonal<Scalar>& t, Scalar x) {
  const Eigen::Index n = t.size();
  const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
  Eigen::Index count = 0;
  Scalar pivot = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar d = t.diag[i] - x;
    if (i > 0) d -= t.off[i - 1] * t.off[i - 1] / pivot;
    if (d == Scalar(0)) d = -tiny;
    if (d < Scalar(0)) ++count;
    pivot = d;
  }
  return count;
}

/// k-th smallest eigenvalue (k = 0 is the minimum), bisected until the
/// bracket cannot be split further in floating point.
template <typename Scalar>
Scalar kth_eigenvalue(const SymTridiagonal<Scalar>& t, Eigen::Index k) {
  if (k < 0 || k >= t.size()) throw std::out_of_range("kth_eigenvalue: index out of range");
  auto [lo, hi] = t.gershgorin();
  const Scalar pad = std::numeric_limits<Scalar>::epsilon() * (std::abs(lo) + std::abs(hi)) + Scalar(1e-300);
  lo -= pad;
  hi += pad;
  for (int it = 0; it < 4000; ++it) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

/// Solves (T - shift I) x = b for a positive definite shifted matrix by LDL^T.
template <typename Scalar>
typename SymTridiagonal<Scalar>::Vector solve_shifted(const SymTridiagonal<Scalar>& t, Scalar shift,
                                                      typename SymTridiagonal<Scalar>::Vector b) {
  const Eigen::Index n = t.size();
  typename SymTridiagonal<Scalar>::Vector d(n), l(n > 1 ? n - 1 : 0);
  const Scalar tiny = std::numeric_limits<Scalar>::epsilon() * (t.scale() + Scalar(1));
  d[0] = t.diag[0] - shift;
  if (std::abs(d[0]) < tiny) d[0] = tiny;
  for (Eigen::Index i = 1; i < n; ++i) {
    l[i - 1] = t.off[i - 1] / d[i - 1];
    d[i] = t.diag[i] - shift - l[i - 1] * t.off[i - 1];
    if (std::abs(d[i]) < tiny) d[i] = tiny;
  }
  for (Eigen::Index i = 1; i < n; ++i) b[i] -= l[i - 1] * b[i - 1];
  for (Eigen::Index i = 0; i < n; ++i) b[i] /= d[i];
  for (Eigen::Index i = n - 2; i >= 0; --i) b[i] -= l[i] * b[i + 1];
  return b;
}

template <typename Scalar>
struct TridiagonalEigenpair {
  Scalar value;
  typename SymTridiagonal<Scalar>::Vector vector;  // unit 2-norm
  Scalar residual;                                 // ||T v - value v||
  Scalar gap;                                      // second eigenvalue minus value (0 if n = 1)
};

/// Smallest eigenpair. The eigenvalue comes from bisection, the vector from
/// inverse iteration with a shift just below it, which keeps T - shift I
/// positive definite.
template <typename Scalar>
TridiagonalEigenpair<Scalar> min_eigenpair(const SymTridiagonal<Scalar>& t, int iterations = 4) {
  using Vector = typename SymTridiagonal<Scalar>::Vector;
  const Eigen::Index n = t.size();
  if (n == 0) throw std::invalid_argument("min_eigenpair: empty matrix");
  if (n == 1) return {t.diag[0], Vector::Ones(1), Scalar(0), Scalar(0)};

  const Scalar value = kth_eigenvalue(t, 0);
  const Scalar second = kth_eigenvalue(t, 1);
  const Scalar gap = second - value;
  const Scalar scale = t.scale() + Scalar(1);
  Scalar delta = std::min(Scalar(1e-12) * scale, gap / 4);
  if (!(delta > Scalar(0))) delta = std::numeric_limits<Scalar>::epsilon() * scale;
  const Scalar shift = value - delta;

  // Fixed pseudo-random start with mixed signs: a constant start can be
  // nearly orthogonal to ground states with alternating coefficients.
  Vector v(n);
  std::uint64_t x = 0x9E3779B97F4A7C15ULL;
  for (Eigen::Index i = 0; i < n; ++i) {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    v[i] = Scalar(static_cast<double>(x >> 11) * 0x1.0p-53) - Scalar(0.5);
  }
  v.normalize();
  for (int it = 0; it < iterations; ++it) {
    v = solve_shifted(t, shift, v);
    v.normalize();
  }
  const Scalar residual = (t.apply(v) - value * v).norm();
  return {value, v, residual, gap};
}

}  // namespace phasest
