#pragma once

#include "ncphase/errors.hpp"
#include "ncphase/hydrogen.hpp"
#include "ncphase/oscillator.hpp"
#include "ncphase/rational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

/// First-order energy shifts of hydrogen levels in the rotationally
/// invariant noncommutative phase space, Hartree atomic units throughout.
namespace ncphase::corrections {

using oscillator::NCParams;

enum class Route { generic_l_ge_2, ns_formula };

inline std::string_view route_name(Route r) {
  return r == Route::ns_formula ? "ns_formula" : "generic_l_ge_2";
}

struct CorrectionResult {
  int n = 0;
  int l = 0;
  double delta_theta = 0.0;
  double delta_eta = 0.0;
  double total = 0.0;
  Route route = Route::generic_l_ge_2;
};

/// Coefficient of the ns-level <theta> term, taken as the exact decimal 1.72.
inline const Rational ns_theta_constant = rational(43, 25);

/// Delta E^(eta)_{n,l} / eta_sq_tilde = n^2 (5n^2 + 1 - 3l(l+1)) / 24,
/// i.e. <r^2> <eta^2> / 12 with the r^2 moment from the hydrogen module.
inline Rational eta_coefficient(int n, int l) {
  const hydrogen::QuantumNumbers q(n, l);
  return hydrogen::r2_expectation(q.n(), q.l()) / 12;
}

/// The four-term bracket B(n,l) of the coordinate-noncommutativity
/// correction, exact. Only finite for l >= 2.
inline Rational theta_bracket(int n, int l) {
  const hydrogen::QuantumNumbers q(n, l);
  if (l == 0)
    throw DivergentFormula("theta correction diverges for l = 0; use the ns-level formula");
  if (l == 1) throw DivergentFormula("theta correction diverges for l = 1; np levels are not supported");
  const Rational N(q.n()), L(q.l());
  const Rational ll1 = L * (L + 1);
  const Rational n2 = N * N;
  const Rational common = 5 * n2 - 3 * ll1 + 1;
  const Rational t1 = Rational(1) / (6 * ll1 * (2 * L + 1));
  const Rational t2 = (6 * n2 - 2 * ll1) / (3 * ll1 * (2 * L + 1) * (2 * L + 3) * (2 * L - 1));
  const Rational t3 = common / (2 * (L + 2) * (2 * L + 1) * (2 * L + 3) * (L - 1) * (2 * L - 1));
  const Rational t4 =
      rational(5, 6) * common / (ll1 * (L + 2) * (2 * L + 1) * (2 * L + 3) * (L - 1) * (2 * L - 1));
  return t1 - t2 + t3 - t4;
}

/// Delta E^(theta)_{n,l} / theta_sq_tilde = -B(n,l) / n^5, exact.
inline Rational theta_coefficient(int n, int l) {
  const Rational B = theta_bracket(n, l);
  const Rational N(n);
  return -B / (N * N * N * N * N);
}

/// Shift from momentum noncommutativity, positive for every level.
inline double delta_eta(int n, int l, const NCParams& params) {
  return to_double(eta_coefficient(n, l)) * params.eta_sq_tilde();
}

/// Shift from coordinate noncommutativity, l >= 2 only.
inline double delta_theta(int n, int l, const NCParams& params) {
  return to_double(theta_coefficient(n, l)) * params.theta_sq_tilde();
}

/// Delta E_ns / (pi theta_tilde) = 1.72 / (8 n^3), exact.
inline Rational ns_theta_coefficient_over_pi(int n) {
  if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1");
  const Rational N(n);
  return ns_theta_constant / (8 * N * N * N);
}

/// ns levels: eta part as for l = 0, theta part linear in <theta>.
inline CorrectionResult delta_ns(int n, const NCParams& params) {
  if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1");
  CorrectionResult r;
  r.n = n;
  r.l = 0;
  r.route = Route::ns_formula;
  r.delta_eta = delta_eta(n, 0, params);
  r.delta_theta = to_double(ns_theta_coefficient_over_pi(n)) * std::numbers::pi * params.theta_tilde();
  r.total = r.delta_theta + r.delta_eta;
  return r;
}

/// First-order shift of level (n, l), dispatching to the ns formula for
/// l = 0. Throws DivergentFormula for l = 1.
inline CorrectionResult correction(int n, int l, const NCParams& params) {
  const hydrogen::QuantumNumbers q(n, l);
  if (l == 0) return delta_ns(n, params);
  CorrectionResult r;
  r.n = n;
  r.l = l;
  r.route = Route::generic_l_ge_2;
  r.delta_theta = delta_theta(n, l, params);
  r.delta_eta = delta_eta(n, l, params);
  r.total = r.delta_theta + r.delta_eta;
  return r;
}

/// 1s-2s transition shift Delta(2s) - Delta(1s), by two routes:
///  - published coefficients: -3 pi theta_tilde / 16 and 13 eta_sq_tilde / 4
///  - difference of the ns-level formula: -1.72 (7/64) pi theta_tilde and
///    (eta_coefficient(2,0) - eta_coefficient(1,0)) eta_sq_tilde
struct TransitionShift {
  double theta_published = 0.0;
  double eta_published = 0.0;
  double theta_ns = 0.0;
  double eta_ns = 0.0;

  /// |theta_ns / theta_published - 1|; zero when both vanish.
  double theta_relative_gap() const {
    if (theta_published == 0.0) return theta_ns == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(theta_ns / theta_published - 1.0);
  }
};

inline const Rational published_theta_transition_over_pi = rational(-3, 16);
inline const Rational published_eta_transition = rational(13, 4);

inline Rational ns_theta_transition_over_pi() {
  return ns_theta_coefficient_over_pi(2) - ns_theta_coefficient_over_pi(1);
}
inline Rational ns_eta_transition() { return eta_coefficient(2, 0) - eta_coefficient(1, 0); }

inline TransitionShift transition_shift(const NCParams& params) {
  TransitionShift t;
  t.theta_published = to_double(published_theta_transition_over_pi) * std::numbers::pi * params.theta_tilde();
  t.eta_published = to_double(published_eta_transition) * params.eta_sq_tilde();
  const CorrectionResult s1 = delta_ns(1, params), s2 = delta_ns(2, params);
  t.theta_ns = s2.delta_theta - s1.delta_theta;
  t.eta_ns = s2.delta_eta - s1.delta_eta;
  return t;
}

/// Second-order contribution of the (eta . L)/2M term through intermediate
/// states with one p^b-oscillator quantum and the same hydrogen (n, l).
///
/// <n l m', 1_k| (eta . L)/2 |n l m, 0> = (p0/2) <1_k|p^b_k|0> <m'|L_k|m>
/// with |<1_k|p^b_k|0>|^2 = m_osc omega / 2 = 1 / (2 l_P^2), and every
/// denominator is -omega. Summing over k and m' gives L^2 = l(l+1):
///   Delta E = -p0^2 l(l+1) / (8 l_P^2 omega) = -eta_sq_tilde l(l+1) / (12 omega).
/// The numerator does not depend on omega once m_osc omega = 1/l_P^2 is
/// imposed, so the term vanishes as omega -> infinity.
inline double second_order_eta_L(int n, int l, double omega, const NCParams& params) {
  const hydrogen::QuantumNumbers q(n, l);
  if (!(omega > 0.0)) throw std::invalid_argument("oscillator frequency must be positive");
  return -params.eta_sq_tilde() * q.l() * (q.l() + 1) / (12.0 * omega);
}

/// Largest first-order expectations <(eta . L)/2> and <(theta . L)/(2 r^3)>
/// over the levels n <= max_n, with the oscillators in their ground states.
struct FirstOrderReport {
  double eta_term = 0.0;
  double theta_term = 0.0;
  bool vanishes(double tol = 1e-12) const { return std::abs(eta_term) < tol && std::abs(theta_term) < tol; }
};

using FirstMomentOracle = std::function<oscillator::oracle::FirstMoments(const NCParams&)>;

inline oscillator::oracle::FirstMoments ground_state_first_moments(const NCParams& params) {
  return oscillator::oracle::ground_state_first_moments(params.theta_sq_tilde(), params.eta_sq_tilde());
}

/// In a state |n l m> only <L_z> = m survives, so each term factorizes into
/// the oscillator first moment along z times a hydrogen factor: m / 2 for
/// the eta term and m <r^-3> / 2 for the theta term (l >= 1; L kills s states).
inline FirstOrderReport first_order_vanishing_check(const NCParams& params,
                                                    const FirstMomentOracle& oracle = ground_state_first_moments,
                                                    int max_n = 4) {
  const oscillator::oracle::FirstMoments moments = oracle(params);
  FirstOrderReport report;
  for (int n = 1; n <= max_n; ++n)
    for (int l = 1; l < n; ++l)
      for (int m = -l; m <= l; ++m) {
        const hydrogen::QuantumNumbers q(n, l, m);
        const double inv_r3 = to_double(hydrogen::radial_moment(q, -3));
        const double eta_term = 0.5 * moments.eta[2] * m;
        const double theta_term = 0.5 * inv_r3 * moments.theta[2] * m;
        if (std::abs(eta_term) > std::abs(report.eta_term)) report.eta_term = eta_term;
        if (std::abs(theta_term) > std::abs(report.theta_term)) report.theta_term = theta_term;
      }
  return report;
}

}  // namespace ncphase::corrections
