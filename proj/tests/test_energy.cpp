#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "phasest/energy.hpp"

using namespace phasest;

TEST(Gamma, MatchesVariational) {
  for (double s : {0.01, 0.1, 1.0, 5.0}) {
    EXPECT_NEAR(phasest::gamma(s), gamma_variational(s, 96), 1e-8) << "s=" << s;
  }
  EXPECT_THROW(gamma_variational(1.0, 10), std::invalid_argument);
}

TEST(Gamma, Endpoints) {
  EXPECT_THROW(phasest::gamma(0.0), std::invalid_argument);
  EXPECT_NEAR(phasest::gamma(1e-4) / gamma_asymptote(1e-4), 1.0, 1e-3);
  // for large s the ground state tends to the constant and gamma -> 1
  EXPECT_NEAR(phasest::gamma(1e4), 1.0, 1e-4);
  EXPECT_LT(phasest::gamma(1e4), 1.0);
}

TEST(Gamma, SlopeMatchesFiniteDifference) {
  for (double s : {0.05, 0.5, 3.0}) {
    const double h = 1e-5 * s;
    const double fd = (phasest::gamma(s + h) - phasest::gamma(s - h)) / (2.0 * h);
    EXPECT_NEAR(gamma_slope(s), fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(GammaProperty, ConcaveAndIncreasing) {
  double prev = 0.0;
  for (int i = 0; i < 60; ++i) {
    const double s = 1e-3 * std::pow(1.25, i);
    const double g = phasest::gamma(s);
    EXPECT_GT(g, prev);
    prev = g;
    const double h = 0.1 * s;
    EXPECT_LE(phasest::gamma(s - h) + phasest::gamma(s + h), 2.0 * g + 1e-12);
  }
}

TEST(Kappa, RejectsNonPositiveEnergy) {
  EXPECT_THROW(kappa(0.0), std::invalid_argument);
  EXPECT_THROW(kappa(-1.0), std::invalid_argument);
  EXPECT_THROW(EnergySpec(0.0), std::invalid_argument);
}

TEST(Kappa, MatchesPrimalOracle) {
  for (double E : {0.2, 1.0, 3.0, 20.0}) {
    const auto tp = kappa(E);
    const auto pr = oracle::kappa_primal(E);
    EXPECT_NEAR(tp.kappa, pr.kappa, 1e-7) << "E=" << E;
    EXPECT_NEAR(tp.s_star, pr.s, 1e-4 * pr.s);
  }
}

TEST(Kappa, LargeEnergyAsymptote) {
  for (double E : {100.0, 1000.0}) EXPECT_NEAR(kappa(E).kappa / kappa_asymptote(E), 1.0, 0.02);
}

TEST(KappaProperty, DecreasingConvexAndMultiplierDecreasing) {
  std::vector<double> Es, ks, ss;
  for (int i = 0; i < 30; ++i) {
    Es.push_back(0.05 * std::pow(1.4, i));
    const auto tp = kappa(Es.back());
    ks.push_back(tp.kappa);
    ss.push_back(tp.s_star);
  }
  for (std::size_t i = 1; i < Es.size(); ++i) {
    EXPECT_LT(ks[i], ks[i - 1]);
    EXPECT_LT(ss[i], ss[i - 1]);
  }
  for (std::size_t i = 1; i + 1 < Es.size(); ++i) {
    const double w = (Es[i] - Es[i - 1]) / (Es[i + 1] - Es[i - 1]);
    EXPECT_LE(ks[i], (1 - w) * ks[i - 1] + w * ks[i + 1] + 1e-12);
  }
  for (double k : ks) {
    EXPECT_GT(k, 0.0);
    EXPECT_LT(k, 1.0);
  }
}

TEST(EnergyState, AttainsKappaWithinBudget) {
  for (double E : {0.3, 1.0, 7.0, 50.0}) {
    const auto st = optimal_energy_state(E);
    EXPECT_NEAR(risk_toeplitz(st, ErrorFunction::sin_loss()), kappa(E).kappa, 1e-9) << "E=" << E;
    EXPECT_LE(mean_energy(st), E * (1.0 + 1e-9));
    EXPECT_NEAR(mean_energy(st), E, 1e-6 * E);
    EXPECT_EQ(st.index_set().lo(), -st.index_set().hi());
    for (int n = 1; n <= st.index_set().hi(); ++n) EXPECT_NEAR(std::abs(st.coeff(n) - st.coeff(-n)), 0.0, 1e-15);
  }
}

TEST(EnergyState, NoCompetitorBeatsIt) {
  // plane waves mixed over {-K..K} at the same energy
  const double E = 1.0;
  const double best = kappa(E).kappa;
  for (double a = 0.05; a < 1.0; a += 0.05) {
    Eigen::VectorXd v(3);
    v << a, std::sqrt((1 - a * a) / 2), std::sqrt((1 - a * a) / 2);
    const auto st = PhaseState::normalized(IndexSet::symmetric(1), v);
    if (mean_energy(st) <= E) {
      EXPECT_GE(risk_toeplitz(st, ErrorFunction::sin_loss()), best - 1e-12);
    }
  }
}

TEST(MeanEnergy, Simple) {
  Eigen::VectorXd v(3);
  v << 1.0, 0.0, 1.0;
  EXPECT_NEAR(mean_energy(PhaseState::normalized(IndexSet(-1, 1), v)), 1.0, 1e-15);
  EXPECT_NEAR(mean_energy(PhaseState::normalized(IndexSet(2, 4), v)), 10.0, 1e-14);
}
