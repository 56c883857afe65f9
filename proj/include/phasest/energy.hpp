#pragma once

// Phase estimation under the energy constraint <H> <= E, H = sum_n n^2 I_n,
// for the sin^2 loss. The minimum risk kappa(E) is the Legendre transform
//   kappa(E) = max_{s > 0} gamma(s) - s E,
// of the ground energy gamma(s) of I - cos Q + s P^2 on 2pi-periodic
// functions, and gamma(s) = s a0(2/s) / 4 + 1.

#include <vector>

#include "phasest/core.hpp"

namespace phasest {

struct EnergySpec {
  double E;
  explicit EnergySpec(double e);
};

struct TradeoffPoint {
  double E;
  double s_star;      // maximizer of gamma(s) - s E
  double kappa;       // gamma_at_s - s_star * E
  double gamma_at_s;  // gamma(s_star)
};

/// s a0(2/s) / 4 + 1. Requires s > 0.
double gamma(double s);

/// <P^2> of the ground state of I - cos Q + s P^2, equal to gamma'(s).
double gamma_slope(double s);

/// Minimum eigenvalue of I - cos Q + s P^2 in the Fourier basis e^{ik theta},
/// k = -M..M. Requires s > 0 and M >= 30.
double gamma_variational(double s, int M);

/// Maximizes gamma(s) - s E. Golden-section search in log s on a bracket
/// grown from s = 1, then the maximizer is polished on the first-order
/// condition gamma'(s) = E from the side where gamma'(s) <= E.
/// Throws NumericalError if no bracket exists inside [1e-12, 1e12].
TradeoffPoint kappa(double E);
TradeoffPoint kappa(const EnergySpec& spec);

/// Leading large-E behaviour 1/(8E) - 1/(128E^2).
double kappa_asymptote(double E);
/// Leading small-s behaviour sqrt(s/2) - s/16.
double gamma_asymptote(double s);

/// State on {-K..K} whose Fourier transform is ce0(theta/2, -2/s_E): the
/// half-angle cosine series with alternating signs. K = 0 picks the smallest
/// K whose discarded tail weight is below 1e-12.
PhaseState optimal_energy_state(double E, int K = 0);

/// sum_n n^2 |phi_n|^2.
double mean_energy(const PhaseState& state);

}  // namespace phasest
