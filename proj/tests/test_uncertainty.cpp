#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "phasest/energy.hpp"
#include "phasest/finite_opt.hpp"
#include "phasest/uncertainty.hpp"
#include "test_util.hpp"

using namespace phasest;

TEST(Uncertainty, PlaneWave) {
  const PhaseState st(IndexSet(3, 3), Eigen::VectorXcd::Ones(1));
  EXPECT_NEAR(delta2_position(st), 1.0, 1e-15);
  EXPECT_NEAR(delta2_momentum(st), 0.0, 1e-15);
  EXPECT_EQ(uncertainty_report(st).bound_at_E, 1.0);
}

TEST(Uncertainty, TwoLevelState) {
  // (|0> + |1>)/sqrt2: <e^{iQ}> = 1/2, momentum variance 1/4
  const auto st = PhaseState::normalized(IndexSet::zero_to(1), Eigen::VectorXd(Eigen::VectorXd::Ones(2)));
  EXPECT_NEAR(std::abs(mean_phase_factor(st)), 0.5, 1e-15);
  EXPECT_NEAR(delta2_position(st), 0.75, 1e-15);
  EXPECT_NEAR(delta2_momentum(st), 0.25, 1e-15);
}

TEST(Uncertainty, MomentumVarianceIsShiftInvariant) {
  const auto st = test::random_state(IndexSet(-3, 6), 9);
  EXPECT_NEAR(delta2_momentum(st.shifted(40)), delta2_momentum(st), 1e-11);
  EXPECT_NEAR(delta2_position(st.shifted(-7)), delta2_position(st), 1e-14);
  EXPECT_NEAR(delta2_position(st.rotated(1.3)), delta2_position(st), 1e-14);
}

TEST(Tradeoff, BoundFromKappa) {
  for (double E : {0.5, 2.0, 30.0}) {
    const double k = kappa(E).kappa;
    EXPECT_NEAR(tradeoff_bound(E), 1.0 - (1.0 - k) * (1.0 - k), 1e-12);
  }
}

TEST(Tradeoff, Asymptote) {
  EXPECT_NEAR(100.0 * tradeoff_bound(100.0), 0.25, 0.02 * 0.25);
  EXPECT_NEAR(tradeoff_asymptote(10.0), 1.0 / 40.0 - 1.0 / 3200.0, 1e-15);
}

TEST(Tradeoff, CurveDecreasing) {
  const auto rows = tradeoff_curve({1.0, 2.0, 5.0, 10.0, 50.0});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].bound, rows[i - 1].bound);
    EXPECT_LT(rows[i].s_star, rows[i - 1].s_star);
  }
}

TEST(Tradeoff, EnergyOptimalStateSaturates) {
  for (double E : {0.5, 3.0}) {
    const auto st = optimal_energy_state(E);
    const auto rep = uncertainty_report(st);
    // the state is centered, so the momentum variance equals the energy
    EXPECT_NEAR(rep.delta2_mom, E, 1e-6 * E);
    EXPECT_NEAR(rep.delta2_pos, rep.bound_at_E, 1e-6);
  }
}

// Property: random states respect the bound at their own momentum variance.
TEST(TradeoffProperty, RandomStatesRespectBound) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int lo = std::uniform_int_distribution<int>(-6, 2)(gen);
    const int len = std::uniform_int_distribution<int>(1, 8)(gen);
    const auto st = (trial % 2) ? test::random_state(IndexSet(lo, lo + len), gen())
                                : test::random_real_state(IndexSet(lo, lo + len), gen());
    const auto rep = uncertainty_report(st);
    EXPECT_GE(rep.delta2_pos, rep.bound_at_E - 1e-8) << "trial " << trial;
  }
}

TEST(TradeoffProperty, SineWindowsRespectBound) {
  for (int n : {1, 3, 10, 40}) {
    const auto rep = uncertainty_report(sine_window_state(IndexSet::zero_to(n)));
    EXPECT_GE(rep.delta2_pos, rep.bound_at_E - 1e-8);
  }
}
