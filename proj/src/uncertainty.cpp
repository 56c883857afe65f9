#include "phasest/uncertainty.hpp"

#include <cmath>

#include "phasest/energy.hpp"
#include "phasest/mathieu.hpp"

namespace phasest {
namespace {

TradeoffRow tradeoff_row(double E) {
  const TradeoffPoint tp = kappa(E);
  const double cos_max = 1.0 - tp.kappa;
  const double bound = 1.0 - cos_max * cos_max;

  // Same quantity straight from the dual expression at s_E.
  const double s = tp.s_star;
  const double inner = s * E - s * mathieu_a0(2.0 / s) / 4.0;
  const double direct = 1.0 - inner * inner;
  if (std::abs(direct - bound) > 1e-9) {
    throw NumericalError("tradeoff_bound: dual expression disagrees with 1 - (1 - kappa)^2");
  }
  return {E, bound, tradeoff_asymptote(E), s};
}

}  // namespace

Complex mean_phase_factor(const PhaseState& state) {
  const auto& phi = state.coeffs();
  const auto n = phi.size();
  if (n < 2) return {0.0, 0.0};
  // <psi| e^{iQ} |psi> with psi = sum phi_k e^{ik theta}: sum_k conj(phi_{k+1}) phi_k
  return phi.tail(n - 1).dot(phi.head(n - 1));
}

double delta2_position(const PhaseState& state) {
  return 1.0 - std::norm(mean_phase_factor(state));
}

double delta2_momentum(const PhaseState& state) {
  const auto& c = state.coeffs();
  // Center the index to keep the two moments small.
  const double mid = 0.5 * (state.index_set().lo() + state.index_set().hi());
  double m1 = 0.0, m2 = 0.0;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    const double k = state.index_set().lo() + static_cast<double>(j) - mid;
    const double w = std::norm(c[j]);
    m1 += k * w;
    m2 += k * k * w;
  }
  return std::max(0.0, m2 - m1 * m1);
}

double tradeoff_bound(double E) {
  if (!(E > 0.0)) throw std::invalid_argument("tradeoff_bound: E must be positive");
  return tradeoff_row(E).bound;
}

double tradeoff_asymptote(double E) { return 1.0 / (4.0 * E) - 1.0 / (32.0 * E * E); }

UncertaintyReport uncertainty_report(const PhaseState& state) {
  UncertaintyReport r;
  r.delta2_pos = delta2_position(state);
  r.delta2_mom = delta2_momentum(state);
  r.bound_at_E = r.delta2_mom > 0.0 ? tradeoff_bound(r.delta2_mom) : 1.0;
  return r;
}

std::vector<TradeoffRow> tradeoff_curve(const std::vector<double>& E_grid) {
  std::vector<TradeoffRow> rows;
  rows.reserve(E_grid.size());
  for (double E : E_grid) {
    if (!(E > 0.0)) throw std::invalid_argument("tradeoff_curve: all E must be positive");
    rows.push_back(tradeoff_row(E));
  }
  return rows;
}

}  // namespace phasest
