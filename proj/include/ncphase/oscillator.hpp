#pragma once

#include "ncphase/constants.hpp"
#include "ncphase/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

/// Ground-state statistics of the auxiliary oscillators whose coordinates a
/// and momenta p^b define the noncommutativity tensors
///   theta_i = (l0/hbar) a_i,   eta_i = (p0/hbar) p^b_i.
/// Both oscillators have length l_P = sqrt(hbar / (m_osc omega)).
///
/// Moments are reported dimensionless (hbar = a_B = 1):
///   theta_tilde    = hbar <theta> / a_B^2
///   theta_sq_tilde = hbar^2 <theta^2> / a_B^4
///   eta_sq_tilde   = a_B^4 <eta^2> / hbar^2
namespace ncphase::oscillator {

/// Physical noncommutativity inputs in atomic units: l0 and l_P in Bohr
/// radii, p0 in hbar / a_B.
struct RawParams {
  double l0 = 0.0;
  double p0 = 0.0;
  double l_P = codata2018.planck_length_bohr();
};

/// Dimensionless moments given directly.
struct MomentParams {
  double theta_tilde = 0.0;
  double theta_sq_tilde = 0.0;
  double eta_sq_tilde = 0.0;
};

class NCParams {
 public:
  static NCParams raw(double l0, double p0, double l_P = codata2018.planck_length_bohr()) {
    if (!(l0 >= 0.0) || !(p0 >= 0.0)) throw std::invalid_argument("l0 and p0 must be non-negative");
    if (!(l_P > 0.0)) throw std::invalid_argument("oscillator length l_P must be positive");
    return NCParams(RawParams{l0, p0, l_P});
  }

  static NCParams moments(double theta_tilde, double theta_sq_tilde, double eta_sq_tilde) {
    if (!(theta_tilde >= 0.0) || !(theta_sq_tilde >= 0.0) || !(eta_sq_tilde >= 0.0))
      throw std::invalid_argument("noncommutativity moments must be non-negative");
    return NCParams(MomentParams{theta_tilde, theta_sq_tilde, eta_sq_tilde});
  }

  bool is_raw() const { return std::holds_alternative<RawParams>(value_); }
  const RawParams& raw_params() const { return std::get<RawParams>(value_); }

  double theta_tilde() const {
    if (auto* r = std::get_if<RawParams>(&value_)) return 2.0 * r->l0 * r->l_P / std::sqrt(std::numbers::pi);
    return std::get<MomentParams>(value_).theta_tilde;
  }
  double theta_sq_tilde() const {
    if (auto* r = std::get_if<RawParams>(&value_)) return 1.5 * r->l0 * r->l0 * r->l_P * r->l_P;
    return std::get<MomentParams>(value_).theta_sq_tilde;
  }
  double eta_sq_tilde() const {
    if (auto* r = std::get_if<RawParams>(&value_)) return 1.5 * r->p0 * r->p0 / (r->l_P * r->l_P);
    return std::get<MomentParams>(value_).eta_sq_tilde;
  }

  /// Raw parameters always describe Gaussian ground states; moment inputs may
  /// be set independently and need not.
  bool is_gaussian_consistent(double rel_tol = 1e-12) const {
    const double t = theta_tilde();
    const double expected = 3.0 * std::numbers::pi / 8.0 * t * t;
    return std::abs(theta_sq_tilde() - expected) <= rel_tol * std::max(expected, theta_sq_tilde());
  }

 private:
  explicit NCParams(std::variant<RawParams, MomentParams> v) : value_(v) {}
  std::variant<RawParams, MomentParams> value_;
};

/// hbar <theta> = 2 l0 l_P / sqrt(pi)
inline double theta_mean(const NCParams& params) { return params.theta_tilde(); }

/// hbar^2 <theta^2> = 3 l0^2 l_P^2 / 2
inline double theta_sq_mean(const NCParams& params) { return params.theta_sq_tilde(); }

/// <eta^2> = 3 p0^2 / (2 l_P^2)
inline double eta_sq_mean(const NCParams& params) { return params.eta_sq_tilde(); }

/// <eta_i eta_j> = <eta^2> delta_ij / 3 (isotropic ground state).
inline double eta_covariance(const NCParams& params, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
  return i == j ? params.eta_sq_tilde() / 3.0 : 0.0;
}

/// Zero-point energy of both three-dimensional oscillators, 3 hbar omega.
inline double oscillator_ground_energy(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("oscillator frequency must be positive");
  return 3.0 * omega;
}

/// m_osc from the constraint m_osc omega = hbar / l_P^2.
inline double oscillator_mass(double omega, double l_P) {
  if (!(omega > 0.0) || !(l_P > 0.0)) throw std::invalid_argument("omega and l_P must be positive");
  return 1.0 / (omega * l_P * l_P);
}

/// Numerical averages over an isotropic three-dimensional Gaussian with
/// per-axis variance sigma^2, the ground-state density of either
/// oscillator in position (sigma^2 = l_P^2 / 2) or momentum
/// (sigma^2 = hbar^2 / (2 l_P^2)) space. Serves as the oracle for the closed
/// forms above.
namespace oracle {

inline constexpr int hermite_nodes = 64;

/// <f(v1, v2, v3)> by a 64^3 product Gauss-Hermite rule. Exact to rounding
/// for polynomial f of degree < 128.
template <class F>
double gaussian_average(double variance, F&& f) {
  static const quadrature::Rule rule = quadrature::gauss_hermite(hermite_nodes);
  const double scale = std::sqrt(2.0 * variance);
  long double sum = 0.0L;
  for (int i = 0; i < hermite_nodes; ++i)
    for (int j = 0; j < hermite_nodes; ++j)
      for (int k = 0; k < hermite_nodes; ++k) {
        const long double w = static_cast<long double>(rule.weights[i]) * rule.weights[j] * rule.weights[k];
        sum += w * f(scale * rule.nodes[i], scale * rule.nodes[j], scale * rule.nodes[k]);
      }
  return static_cast<double>(sum / std::pow(std::numbers::pi_v<long double>, 1.5L));
}

/// <|v|>. The norm has a kink at the origin that defeats the product rule,
/// so the angular integral is done analytically (4 pi) and the radial one
/// adaptively. With v = sigma u:
///   <|v|> = 4 pi sigma (2 pi)^(-3/2) * int_0^inf u^3 exp(-u^2 / 2) du
inline double gaussian_mean_norm(double variance) {
  if (variance == 0.0) return 0.0;
  auto integrand = [](double u) { return u * u * u * std::exp(-0.5 * u * u); };
  const double radial = quadrature::integrate_adaptive(integrand, 0.0, 40.0, 1e-13).value;
  return 4.0 * std::numbers::pi * std::sqrt(variance) * radial / std::pow(2.0 * std::numbers::pi, 1.5);
}

/// First moments <theta_i> and <eta_i> (dimensionless as above).
struct FirstMoments {
  std::array<double, 3> theta{};
  std::array<double, 3> eta{};
};

/// Ground-state first moments from the product rule. Odd integrands, so
/// every component vanishes up to rounding.
inline FirstMoments ground_state_first_moments(double theta_sq_tilde, double eta_sq_tilde) {
  FirstMoments m;
  for (int axis = 0; axis < 3; ++axis) {
    auto component = [axis](double v1, double v2, double v3) { return axis == 0 ? v1 : axis == 1 ? v2 : v3; };
    m.theta[axis] = gaussian_average(theta_sq_tilde / 3.0, component);
    m.eta[axis] = gaussian_average(eta_sq_tilde / 3.0, component);
  }
  return m;
}

}  // namespace oracle

}  // namespace ncphase::oscillator
