#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "phasest/core.hpp"
#include "test_util.hpp"

using namespace phasest;

TEST(IndexSet, RejectsEmptyRange) {
  EXPECT_THROW(IndexSet(3, 2), std::invalid_argument);
  EXPECT_EQ(IndexSet::zero_to(4).size(), 5u);
  EXPECT_EQ(IndexSet::symmetric(2).lo(), -2);
  EXPECT_TRUE(IndexSet(-1, 1).contains(0));
  EXPECT_EQ(IndexSet(0, 3).shifted(2), IndexSet(2, 5));
}

TEST(PhaseState, RejectsUnnormalized) {
  Eigen::VectorXcd v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(PhaseState(IndexSet::zero_to(1), v), std::invalid_argument);
  EXPECT_THROW(PhaseState(IndexSet::zero_to(2), v / std::sqrt(2.0)), std::invalid_argument);
  EXPECT_NO_THROW(PhaseState(IndexSet::zero_to(1), v / std::sqrt(2.0)));
  EXPECT_THROW(PhaseState::normalized(IndexSet::zero_to(1), Eigen::VectorXcd(Eigen::VectorXcd::Zero(2))), std::invalid_argument);
}

TEST(ErrorFunction, IntervalRejectsWideWindow) {
  EXPECT_THROW(ErrorFunction::interval(4.0, 1), std::invalid_argument);
  EXPECT_THROW(ErrorFunction::interval(-1.0, 2), std::invalid_argument);
  EXPECT_THROW(ErrorFunction::interval(1.0, 0), std::invalid_argument);
  EXPECT_NO_THROW(ErrorFunction::interval(3.0, 1));
}

TEST(ErrorFunction, SinCoefficients) {
  const auto r = ErrorFunction::sin_loss().fourier_coeffs(4);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_DOUBLE_EQ(r[0], 1.0);
  EXPECT_DOUBLE_EQ(r[1], -0.5);
  EXPECT_DOUBLE_EQ(r[2], 0.0);
}

// Coefficients of the indicator loss checked against direct integration of
// (1/2pi) int R(d) cos(m d) dd.
TEST(ErrorFunction, IntervalCoefficientsMatchQuadrature) {
  for (auto [T, N] : std::vector<std::pair<double, int>>{{1.0, 4}, {2.5, 3}, {0.3, 1}}) {
    const auto err = ErrorFunction::interval(T, N);
    const auto r = err.fourier_coeffs(6);
    const double w = T / N;
    for (int m = 0; m <= 6; ++m) {
      // R = 1 outside [-w, w]: integrate the complement to avoid the jump
      const double inside = oracle::adaptive_simpson([m](double d) { return std::cos(m * d); }, -w, w, 1e-14);
      const double total = (m == 0) ? kTwoPi : 0.0;
      const double ref = (total - inside) / kTwoPi;
      EXPECT_NEAR(r[m], ref, 1e-10) << "T=" << T << " N=" << N << " m=" << m;
    }
  }
}

TEST(ErrorFunction, ValueMatchesCosineSeriesForSin) {
  const auto err = ErrorFunction::sin_loss();
  for (double d : {-3.0, -0.4, 0.0, 1.2, 2.9}) {
    EXPECT_NEAR(err.value(d), 1.0 - std::cos(d), 1e-15);
  }
  const auto ind = ErrorFunction::interval(1.0, 4);
  EXPECT_EQ(ind.value(0.1), 0.0);
  EXPECT_EQ(ind.value(0.3), 1.0);
  EXPECT_EQ(ind.value(-0.3), 1.0);
}

TEST(Angles, Wrap) {
  EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-15);
  EXPECT_NEAR(wrap_positive(-0.5), kTwoPi - 0.5, 1e-15);
  EXPECT_GE(wrap_positive(-1e-18), 0.0);
  EXPECT_LT(wrap_positive(-1e-18), kTwoPi);
}

TEST(Risk, QuadratureGridTooSmallThrows) {
  const auto st = test::random_state(IndexSet::zero_to(20), 7);
  EXPECT_THROW(risk_quadrature(st, ErrorFunction::sin_loss(), 16), std::invalid_argument);
}

TEST(Risk, SineWindowExample) {
  // phi = (1, 1)/sqrt2 on {0,1}: risk = 1 - 1/2 = 1/2
  const auto st = PhaseState::normalized(IndexSet::zero_to(1), Eigen::VectorXd(Eigen::VectorXd::Ones(2)));
  EXPECT_NEAR(risk_toeplitz(st, ErrorFunction::sin_loss()), 0.5, 1e-15);
  EXPECT_NEAR(risk_quadrature(st, ErrorFunction::sin_loss()), 0.5, 1e-14);
}

TEST(Risk, DensityIntegratesToOne) {
  const auto st = test::random_state(IndexSet(-3, 5), 11);
  const double mass = oracle::adaptive_simpson(
      [&](double t) { return outcome_density(st, 0.4, t); }, 0.0, kTwoPi, 1e-12);
  EXPECT_NEAR(mass, 1.0, 1e-10);
}

// Property: Toeplitz evaluation and direct integration agree for random
// states and random custom losses.
TEST(RiskProperty, QuadratureMatchesToeplitz) {
  std::mt19937_64 gen(101);
  std::uniform_int_distribution<int> lo_d(-10, 10), len_d(0, 12), lag_d(1, 6);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 200; ++trial) {
    const int lo = lo_d(gen);
    const IndexSet S(lo, lo + len_d(gen));
    const auto st = test::random_state(S, gen());
    std::vector<double> c(static_cast<std::size_t>(lag_d(gen)) + 1);
    for (double& x : c) x = nd(gen);
    const auto err = ErrorFunction::custom(c);
    EXPECT_NEAR(risk_quadrature(st, err), risk_toeplitz(st, err), 1e-12) << "trial " << trial;
  }
}

TEST(RiskProperty, InvariantUnderGlobalPhaseAndShift) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto st = test::random_state(IndexSet(0, 8), gen());
    const auto err = ErrorFunction::interval(1.3, 2);
    const double base = risk_toeplitz(st, err);
    const double alpha = std::uniform_real_distribution<double>(-kPi, kPi)(gen);
    const int c = std::uniform_int_distribution<int>(-20, 20)(gen);
    EXPECT_NEAR(outcome_density(st.rotated(alpha), 0.0, 1.0), outcome_density(st, 0.0, 1.0 + alpha), 1e-13);
    EXPECT_NEAR(risk_toeplitz(st.shifted(c), err), base, 1e-13);
    PhaseState g(st.index_set(), st.coeffs() * std::polar(1.0, alpha));
    EXPECT_NEAR(risk_toeplitz(g, err), base, 1e-13);
  }
}

// Covariance: rotating the state shifts the outcome density.
TEST(RiskProperty, DensityCovariance) {
  const auto st = test::random_state(IndexSet(-2, 4), 3);
  for (double a : {0.3, -1.1, 2.7}) {
    for (double t : {0.0, 1.0, 4.0}) {
      EXPECT_NEAR(outcome_density(st, 0.5 + a, t + a), outcome_density(st, 0.5, t), 1e-13);
    }
  }
}

TEST(RiskProperty, NonNegativeForNonNegativeLoss) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto st = test::random_state(IndexSet(0, 15), gen());
    EXPECT_GE(risk_toeplitz(st, ErrorFunction::sin_loss()), -1e-15);
    EXPECT_GE(risk_toeplitz(st, ErrorFunction::interval(2.0, 3)), -1e-14);
    EXPECT_LE(risk_toeplitz(st, ErrorFunction::interval(2.0, 3)), 1.0 + 1e-14);
  }
}

TEST(Toeplitz, MatrixStructure) {
  const auto form = ToeplitzForm::from_error(ErrorFunction::sin_loss(), 4);
  const Eigen::MatrixXd m = form.matrix();
  EXPECT_EQ(form.bandwidth(), 2u);
  EXPECT_DOUBLE_EQ(m(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m(2, 1), -0.5);
  EXPECT_DOUBLE_EQ(m(0, 2), 0.0);
  EXPECT_TRUE(m.isApprox(m.transpose()));
}
