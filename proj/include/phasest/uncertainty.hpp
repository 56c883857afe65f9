#pragma once

// Position/momentum uncertainty on the circle. Position spread is
// 1 - <cos Q>^2 - <sin Q>^2, momentum spread the variance of P. The exact
// trade-off is 1 - (1 - kappa(E))^2 = max_s 1 - (sE - s a0(2/s)/4)^2.

#include <vector>

#include "phasest/core.hpp"

namespace phasest {

struct UncertaintyReport {
  double delta2_pos;
  double delta2_mom;
  double bound_at_E;  // tradeoff_bound(delta2_mom); 1 for a plane wave
};

/// 1 - <cos Q>^2 - <sin Q>^2 from the shift-operator matrix element
/// <e^{iQ}> = sum_k phi_k conj(phi_{k+1}).
double delta2_position(const PhaseState& state);

/// sum k^2 |phi_k|^2 - (sum k |phi_k|^2)^2.
double delta2_momentum(const PhaseState& state);

/// <e^{iQ}> (real part <cos Q>, imaginary part <sin Q>).
Complex mean_phase_factor(const PhaseState& state);

/// Minimum of delta2_position over states with delta2_momentum <= E.
/// Requires E > 0.
double tradeoff_bound(double E);

/// 1/(4E) - 1/(32E^2).
double tradeoff_asymptote(double E);

UncertaintyReport uncertainty_report(const PhaseState& state);

struct TradeoffRow {
  double E;
  double bound;
  double asymptote;
  double s_star;
};

std::vector<TradeoffRow> tradeoff_curve(const std::vector<double>& E_grid);

}  // namespace phasest
