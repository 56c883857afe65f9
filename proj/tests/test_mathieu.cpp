#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "phasest/mathieu.hpp"

using namespace phasest;

TEST(Mathieu, ZeroAtOrigin) {
  EXPECT_EQ(mathieu_a0(0.0), 0.0);
  const auto g = mathieu_ground(0.0);
  EXPECT_NEAR(g.cos_coeffs[0], 1.0 / std::sqrt(kPi), 1e-15);
}

TEST(Mathieu, SmallQSeries) {
  for (double q : {1e-3, 1e-2, 0.1}) {
    const double series = -q * q / 2.0 + 7.0 * std::pow(q, 4) / 128.0;
    EXPECT_NEAR(mathieu_a0(q), series, 2.0 * std::pow(q, 6));
  }
}

TEST(Mathieu, MatchesGridOracle) {
  for (double q : {0.25, 1.0, 3.0, 8.0}) {
    EXPECT_NEAR(mathieu_a0(q), oracle::mathieu_a0_grid(q), 1e-8) << "q=" << q;
  }
}

TEST(Mathieu, KnownValue) {
  // a0(1) = -0.45513860...
  EXPECT_NEAR(mathieu_a0(1.0), -0.4551386041, 1e-9);
}

TEST(Mathieu, SymmetricInQ) {
  for (double q : {0.3, 2.0, 15.0, 100.0}) EXPECT_EQ(mathieu_a0(q), mathieu_a0(-q));
  const auto p = mathieu_ground(2.0), m = mathieu_ground(-2.0);
  for (Eigen::Index k = 0; k < p.cos_coeffs.size(); ++k) {
    EXPECT_NEAR(m.cos_coeffs[k], (k % 2 == 0 ? 1.0 : -1.0) * p.cos_coeffs[k], 1e-14);
  }
}

TEST(Mathieu, DecreasingInAbsQ) {
  double prev = 1.0;
  for (double q = 0.0; q <= 40.0; q += 0.5) {
    const double a = mathieu_a0(q);
    EXPECT_LT(a, prev);
    prev = a;
  }
}

TEST(Mathieu, LargeQStaysAboveLowerBound) {
  // a0 >= -2|q| since the potential 2q cos 2x is bounded by 2|q|
  for (double q : {50.0, 500.0, 5000.0}) {
    const double a = mathieu_a0(q);
    EXPECT_GT(a, -2.0 * q);
    EXPECT_NEAR(a, -2.0 * q + 2.0 * std::sqrt(q) - 0.25, 0.1);
  }
}

TEST(Mathieu, TruncationDoublingStable) {
  for (double q : {0.5, 5.0, 30.0}) {
    const int M = mathieu_truncation(q);
    EXPECT_NEAR(mathieu_a0(q, M), mathieu_a0(q, 2 * M), 1e-12 * std::max(1.0, std::abs(mathieu_a0(q))));
  }
}

TEST(Mathieu, CoefficientsNormalizedAndPositiveLeading) {
  for (double q : {0.5, 4.0, 25.0}) {
    const auto g = mathieu_ground(q);
    const auto& A = g.cos_coeffs;
    const double norm2 = 2.0 * A[0] * A[0] + A.tail(A.size() - 1).squaredNorm();
    EXPECT_NEAR(norm2, 2.0 / kPi, 1e-13);
    EXPECT_GT(A[0], 0.0);
    EXPECT_LT(g.residual, 1e-12);
  }
}

// The differential equation y'' + (a - 2q cos 2x) y = 0 holds pointwise.
TEST(Mathieu, OdeResidual) {
  for (double q : {0.7, 3.0, 12.0}) {
    const auto g = mathieu_ground(q);
    const auto& A = g.cos_coeffs;
    double worst = 0.0;
    for (double x = 0.0; x < kPi; x += 0.05) {
      double y = 0.0, ypp = 0.0;
      for (Eigen::Index m = 0; m < A.size(); ++m) {
        const double c = std::cos(2.0 * m * x);
        y += A[m] * c;
        ypp -= 4.0 * m * m * A[m] * c;
      }
      worst = std::max(worst, std::abs(ypp + (g.a0 - 2.0 * q * std::cos(2.0 * x)) * y));
      EXPECT_NEAR(ce0_eval(g, x), y, 1e-13);
    }
    EXPECT_LT(worst, 1e-8) << "q=" << q;
  }
}

TEST(Mathieu, GroundStateHasNoZeros) {
  for (double q : {1.0, 10.0, -10.0}) {
    for (double x = 0.0; x < kPi; x += 0.01) EXPECT_GT(ce0_eval(q, x), 0.0);
  }
}

// The eigenvalue minimizes the Rayleigh quotient: trial functions give upper
// bounds.
TEST(Mathieu, RayleighQuotientUpperBound) {
  const double q = 2.0;
  const int M = 30;
  const auto t = mathieu_matrix(q, M);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(M + 1);
  for (int trial = 0; trial < 20; ++trial) {
    for (int m = 0; m <= M; ++m) v[m] = std::pow(-0.3 - 0.02 * trial, m);
    const double rq = v.dot(t.apply(v)) / v.squaredNorm();
    EXPECT_GE(rq, mathieu_a0(q) - 1e-12);
  }
}
