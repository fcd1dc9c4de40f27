#pragma once

#include "ncphase/constants.hpp"
#include "ncphase/corrections.hpp"
#include "ncphase/hydrogen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

/// Upper bounds on the noncommutativity moments from the requirement that the
/// 1s-2s transition shift stay within the measured relative accuracy.
namespace ncphase::bounds {

/// Reference 1s-2s measurement: f = 2466061413187018(11) Hz.
struct TransitionReference {
  double frequency_hz = 2466061413187018.0;
  double uncertainty_hz = 11.0;
  double rel_accuracy = 4.5e-15;
};

inline TransitionReference transition_reference() { return {}; }

/// Which 1s-2s coefficient for the <theta> term to invert.
enum class ThetaRoute {
  published,  ///< -3 pi / 16
  ns      ///< 1.72 * (1/8 - 1) * pi / 8, from the ns-level formula
};

/// |E2 - E1| = 3/8 Hartree
inline double transition_energy() { return std::abs(hydrogen::energy0(2) - hydrogen::energy0(1)); }

/// Magnitude of the 1s-2s shift per unit theta_tilde.
inline double theta_transition_coefficient(ThetaRoute route) {
  const Rational over_pi =
      route == ThetaRoute::published ? corrections::published_theta_transition_over_pi : corrections::ns_theta_transition_over_pi();
  return std::abs(to_double(over_pi)) * std::numbers::pi;
}

struct ThetaBound {
  double theta_tilde = 0.0;  ///< hbar <theta> / a_B^2
  double hbar_theta_m2 = 0.0;
};

struct EtaBound {
  double eta_tilde = 0.0;  ///< a_B^2 sqrt(<eta^2>) / hbar
  double hbar_sqrt_eta_si = 0.0;  ///< kg^2 m^2 / s^2
};

namespace detail {
inline void check_budget(double rel_accuracy, double budget_fraction) {
  if (!(rel_accuracy > 0.0)) throw std::invalid_argument("relative accuracy must be positive");
  if (!(budget_fraction > 0.0) || budget_fraction > 1.0)
    throw std::invalid_argument("budget fraction must lie in (0, 1]");
}
}  // namespace detail

/// Largest theta_tilde with |Delta_theta| / |E2 - E1| <= budget * accuracy.
/// On the published route this is budget * accuracy * 2 / pi.
inline ThetaBound bound_theta(double rel_accuracy, double budget_fraction, ThetaRoute route = ThetaRoute::published,
                              const PhysicalConstants& c = codata2018) {
  detail::check_budget(rel_accuracy, budget_fraction);
  ThetaBound b;
  b.theta_tilde = budget_fraction * rel_accuracy * transition_energy() / theta_transition_coefficient(route);
  b.hbar_theta_m2 = b.theta_tilde * c.bohr_radius_m * c.bohr_radius_m;
  return b;
}

/// Largest eta_tilde with (13/4) eta_tilde^2 / |E2 - E1| <= budget * accuracy,
/// i.e. sqrt(budget * accuracy * 3 / 26).
inline EtaBound bound_eta(double rel_accuracy, double budget_fraction, const PhysicalConstants& c = codata2018) {
  detail::check_budget(rel_accuracy, budget_fraction);
  EtaBound b;
  b.eta_tilde =
      std::sqrt(budget_fraction * rel_accuracy * transition_energy() / to_double(corrections::published_eta_transition));
  b.hbar_sqrt_eta_si = b.eta_tilde * c.hbar_J_s * c.hbar_J_s / (c.bohr_radius_m * c.bohr_radius_m);
  return b;
}

/// Published bounds, used only for comparison.
inline constexpr double published_theta_bound_m2 = 1e-36;
inline constexpr double published_eta_bound_si = 1e-61;
inline constexpr int published_theta_order = -36;
inline constexpr int published_eta_order = -61;

struct BoundOptions {
  double rel_accuracy = transition_reference().rel_accuracy;
  double theta_fraction = 0.5;
  double eta_fraction = 0.5;
  ThetaRoute theta_route = ThetaRoute::published;
};

struct BoundResult {
  ThetaBound theta;
  EtaBound eta;
  BoundOptions options;
  /// Decimal order of the theta bound equals that of the published 1e-36 m^2.
  bool theta_published_order_match = false;
  /// The eta bound differs in order from the published 1e-61 kg^2 m^2/s^2.
  bool eta_published_value_discrepancy = false;
};

inline int decimal_order(double v) { return static_cast<int>(std::floor(std::log10(v))); }

inline BoundResult estimate_bounds(const BoundOptions& opts = {}, const PhysicalConstants& c = codata2018) {
  BoundResult r;
  r.options = opts;
  r.theta = bound_theta(opts.rel_accuracy, opts.theta_fraction, opts.theta_route, c);
  r.eta = bound_eta(opts.rel_accuracy, opts.eta_fraction, c);
  r.theta_published_order_match = decimal_order(r.theta.hbar_theta_m2) == published_theta_order;
  r.eta_published_value_discrepancy = decimal_order(r.eta.hbar_sqrt_eta_si) != published_eta_order;
  return r;
}

}  // namespace ncphase::bounds
