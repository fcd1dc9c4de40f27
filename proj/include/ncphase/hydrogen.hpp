#pragma once

#include "ncphase/errors.hpp"
#include "ncphase/quadrature.hpp"
#include "ncphase/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

/// Bound states of the nonrelativistic hydrogen atom in Hartree atomic units
/// (hbar = M = e = 1, lengths in Bohr radii, M the electron mass).
namespace ncphase::hydrogen {

/// Hydrogen level label with 0 <= l <= n-1 and -l <= m <= l.
class QuantumNumbers {
 public:
  QuantumNumbers(int n, int l, int m = 0) : n_(n), l_(l), m_(m) {
    if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1");
    if (l < 0 || l > n - 1) throw std::invalid_argument("orbital quantum number must satisfy 0 <= l <= n-1");
    if (m < -l || m > l) throw std::invalid_argument("magnetic quantum number must satisfy -l <= m <= l");
  }

  int n() const { return n_; }
  int l() const { return l_; }
  int m() const { return m_; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  int n_, l_, m_;
};

inline Rational energy0_exact(int n) {
  if (n < 1) throw std::invalid_argument("energy0: n must be >= 1");
  return Rational(-1) / (2 * Rational(n) * n);
}

/// Unperturbed level -1/(2 n^2) Hartree.
inline double energy0(int n) { return to_double(energy0_exact(n)); }

/// <r^s> exists iff the integrand r^(2l+s+2) is integrable at the origin.
inline bool moment_converges(int l, int s) { return s > -2 * l - 3; }

namespace detail {

inline void require_convergent(const QuantumNumbers& q, int s) {
  if (!moment_converges(q.l(), s))
    throw DivergentMoment("<r^" + std::to_string(s) + "> diverges for l = " + std::to_string(q.l()));
}

// <r^s> from <r^(s-1)>, <r^(s-2)> via
//   (s+1)/n^2 <r^s> - (2s+1) <r^(s-1)> + (s/4) ((2l+1)^2 - s^2) <r^(s-2)> = 0
inline Rational kp_up(int n, int l, int s, const Rational& prev1, const Rational& prev2) {
  const Rational n2 = Rational(n) * n;
  const Rational c2 = Rational(s) / 4 * (Rational(2 * l + 1) * (2 * l + 1) - Rational(s) * s);
  return n2 / (s + 1) * (Rational(2 * s + 1) * prev1 - c2 * prev2);
}

// <r^(t-2)> from <r^t>, <r^(t-1)>; same relation solved for the last term.
inline Rational kp_down(int n, int l, int t, const Rational& at_t, const Rational& at_t1) {
  const Rational n2 = Rational(n) * n;
  const Rational c2 = Rational(t) / 4 * (Rational(2 * l + 1) * (2 * l + 1) - Rational(t) * t);
  return (Rational(2 * t + 1) * at_t1 - Rational(t + 1) / n2 * at_t) / c2;
}

inline Rational closed_form(int n, int l, int s) {
  const Rational N(n), Ll(l);
  const Rational ll1 = Ll * (l + 1);
  switch (s) {
    case -3: return Rational(1) / (N * N * N * Ll * (Ll + rational(1, 2)) * (l + 1));
    case -2: return Rational(1) / (N * N * N * (Ll + rational(1, 2)));
    case -1: return Rational(1) / (N * N);
    case 0: return Rational(1);
    case 1: return (3 * N * N - ll1) / 2;
    case 2: return N * N / 2 * (5 * N * N + 1 - 3 * ll1);
    default: throw std::logic_error("no closed form for this power");
  }
}

}  // namespace detail

/// <r^2> = n^2 (5 n^2 + 1 - 3 l (l+1)) / 2, the radial input to the
/// momentum-noncommutativity correction.
inline Rational r2_expectation(int n, int l) {
  const QuantumNumbers q(n, l);
  return detail::closed_form(q.n(), q.l(), 2);
}

/// <r^s> in units of a_B^s, exact. Closed forms for -3 <= s <= 2,
/// Kramers-Pasternack recursion outside that range. Independent of m.
/// Throws DivergentMoment when s <= -2l-3.
inline Rational radial_moment(const QuantumNumbers& q, int s) {
  detail::require_convergent(q, s);
  const int n = q.n(), l = q.l();
  if (s >= -3 && s <= 2) return detail::closed_form(n, l, s);
  if (s > 2) {
    Rational prev2 = detail::closed_form(n, l, 1), prev1 = detail::closed_form(n, l, 2);
    for (int k = 3; k <= s; ++k) {
      Rational next = detail::kp_up(n, l, k, prev1, prev2);
      prev2 = std::move(prev1);
      prev1 = std::move(next);
    }
    return prev1;
  }
  Rational at_t = detail::closed_form(n, l, -2), at_t1 = detail::closed_form(n, l, -3);
  for (int target = -4; target >= s; --target) {
    Rational next = detail::kp_down(n, l, target + 2, at_t, at_t1);
    at_t = std::move(at_t1);
    at_t1 = std::move(next);
  }
  return at_t1;
}

/// <r^s> by Kramers-Pasternack recursion alone, seeded only with <r^0> = 1,
/// <r^-1> = 1/n^2 and (for s <= -2, which the upward recursion cannot
/// reach) <r^-2> = 2/(n^3 (2l+1)).
inline Rational recursion_moment(const QuantumNumbers& q, int s) {
  detail::require_convergent(q, s);
  const int n = q.n(), l = q.l();
  if (s == 0) return 1;
  if (s == -1) return Rational(1) / (Rational(n) * n);
  if (s > 0) {
    Rational prev2 = Rational(1) / (Rational(n) * n), prev1 = 1;
    for (int k = 1; k <= s; ++k) {
      Rational next = detail::kp_up(n, l, k, prev1, prev2);
      prev2 = std::move(prev1);
      prev1 = std::move(next);
    }
    return prev1;
  }
  const Rational seed = Rational(2) / (Rational(n) * n * n * (2 * l + 1));
  if (s == -2) return seed;
  // t = -1 links <r^-1>, <r^-2>, <r^-3>; the <r^-1> coefficient (t+1) vanishes.
  Rational at_t = Rational(1) / (Rational(n) * n), at_t1 = seed;
  for (int target = -3; target >= s; --target) {
    Rational next = detail::kp_down(n, l, target + 2, at_t, at_t1);
    at_t = std::move(at_t1);
    at_t1 = std::move(next);
  }
  return at_t1;
}

/// Left side of the Kramers-Pasternack relation at power s, evaluated with
/// radial_moment. Exactly zero wherever all three moments exist.
inline Rational kramers_residual(const QuantumNumbers& q, int s) {
  const int n = q.n(), l = q.l();
  const Rational n2 = Rational(n) * n;
  const Rational c2 = Rational(s) / 4 * (Rational(2 * l + 1) * (2 * l + 1) - Rational(s) * s);
  return Rational(s + 1) / n2 * radial_moment(q, s) - Rational(2 * s + 1) * radial_moment(q, s - 1) +
         c2 * radial_moment(q, s - 2);
}

/// R_nl(r) = N (2r/n)^l exp(-r/n) L^(2l+1)_(n-l-1)(2r/n), normalized so that
/// the integral of R^2 r^2 over [0, inf) is one.
class RadialState {
 public:
  RadialState(int n, int l) : n_(n), l_(l) {
    const QuantumNumbers q(n, l);
    const int k = n - l - 1;
    const int alpha = 2 * l + 1;
    // N^2 = (2/n)^3 (n-l-1)! / (2n (n+l)!)
    norm_sq_ = Rational(8) / (Rational(n) * n * n) * factorial(k) / (2 * Rational(n) * factorial(n + l));
    // L^(alpha)_k(x) = sum_j (-1)^j C(k+alpha, k-j) x^j / j!
    laguerre_.reserve(k + 1);
    for (int j = 0; j <= k; ++j) {
      Rational c = binomial(k + alpha, k - j) / factorial(j);
      laguerre_.push_back(j % 2 ? Rational(-c) : c);
    }
  }

  int n() const { return n_; }
  int l() const { return l_; }
  const Rational& normalization_squared() const { return norm_sq_; }
  const std::vector<Rational>& laguerre_coefficients() const { return laguerre_; }

  double operator()(double r) const {
    const long double rho = 2.0L * r / n_;
    long double poly = 0.0L;
    for (auto it = laguerre_.rbegin(); it != laguerre_.rend(); ++it) poly = poly * rho + it->convert_to<long double>();
    return static_cast<double>(std::sqrt(norm_sq_.convert_to<long double>()) * std::pow(rho, l_) *
                               std::exp(-0.5L * rho) * poly);
  }

 private:
  static Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  }
  static Rational binomial(int top, int bottom) { return factorial(top) / (factorial(bottom) * factorial(top - bottom)); }

  int n_, l_;
  Rational norm_sq_;
  std::vector<Rational> laguerre_;
};

/// Outer integration limit 2n(n+40); the discarded tail is below 1e-14.
inline double quadrature_cutoff(int n) { return 2.0 * n * (n + 40); }

/// Oracle for <r^s>: adaptive Gauss-Kronrod integration of R_nl^2 r^(s+2)
/// over [0, 2n(n+40)]. Floating point only; never used to produce the
/// published values, only to check them.
inline double quadrature_moment(const QuantumNumbers& q, int s, double rel_tol = 1e-12) {
  detail::require_convergent(q, s);
  if (!(rel_tol > 0.0)) throw std::invalid_argument("quadrature_moment: tolerance must be positive");
  const RadialState state(q.n(), q.l());
  const int power = s + 2;
  auto integrand = [&](double r) {
    const double R = state(r);
    return R * R * std::pow(r, power);
  };
  return quadrature::integrate_adaptive(integrand, 0.0, quadrature_cutoff(q.n()), rel_tol).value;
}

}  // namespace ncphase::hydrogen
