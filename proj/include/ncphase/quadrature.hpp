#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ncphase::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight exp(-x^2) on the real line (Newton
/// iteration on orthonormal Hermite functions).
inline Rule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be positive");
  constexpr double eps = 3e-14;
  constexpr int max_iter = 100;
  const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  Rule r{std::vector<double>(n), std::vector<double>(n)};
  double z = 0.0;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * r.nodes[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * r.nodes[1];
    else
      z = 2.0 * z - r.nodes[i - 2];
    double pp = 0.0;
    int it = 0;
    for (; it < max_iter; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps * std::max(1.0, std::abs(z))) break;
    }
    if (it == max_iter) throw std::runtime_error("gauss_hermite: Newton iteration did not converge");
    r.nodes[i] = z;
    r.nodes[n - 1 - i] = -z;
    r.weights[i] = 2.0 / (pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

/// Generalized Gauss-Laguerre rule for weight x^alpha exp(-x) on [0, inf).
inline Rule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be positive");
  if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
  constexpr double eps = 3e-14;
  constexpr int max_iter = 100;
  Rule r{std::vector<double>(n), std::vector<double>(n)};
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    } else if (i == 1) {
      z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
    } else {
      const int ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) * (z - r.nodes[i - 2]) /
           (1.0 + 0.3 * alpha);
    }
    double p2 = 0.0, pp = 0.0;
    int it = 0;
    for (; it < max_iter; ++it) {
      double p1 = 1.0;
      p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j + 1 + alpha - z) * p2 - (j + alpha) * p3) / (j + 1);
      }
      pp = (n * p1 - (n + alpha) * p2) / z;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps * std::max(1.0, std::abs(z))) break;
    }
    if (it == max_iter) throw std::runtime_error("gauss_laguerre: Newton iteration did not converge");
    r.nodes[i] = z;
    r.weights[i] = -std::exp(std::lgamma(alpha + n) - std::lgamma(static_cast<double>(n))) / (pp * n * p2);
  }
  return r;
}

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK constants).
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double g7_weights[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                         0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi;
  long double value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment kronrod15(F& f, double lo, double hi) {
  const long double center = 0.5L * (static_cast<long double>(lo) + hi);
  const long double half = 0.5L * (static_cast<long double>(hi) - lo);
  const long double fc = f(static_cast<double>(center));
  long double kronrod = fc * gk_weights[7];
  long double gauss = fc * g7_weights[3];
  for (int j = 0; j < 7; ++j) {
    const long double dx = half * gk_nodes[j];
    const long double sum = static_cast<long double>(f(static_cast<double>(center - dx))) +
                            static_cast<long double>(f(static_cast<double>(center + dx)));
    kronrod += gk_weights[j] * sum;
    if (j % 2 == 1) gauss += g7_weights[j / 2] * sum;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

struct AdaptiveResult {
  double value;
  double error_estimate;
  int intervals;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi].
/// Bisects the segment with the largest error estimate until the summed
/// estimate drops below rel_tol * |value| (or abs_floor). Throws
/// std::runtime_error when the interval budget runs out first.
template <class F>
AdaptiveResult integrate_adaptive(F&& f, double lo, double hi, double rel_tol, int max_intervals = 4000,
                                  double abs_floor = 0.0) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
  if (!(hi > lo)) throw std::invalid_argument("integrate_adaptive: empty interval");
  std::priority_queue<detail::Segment> heap;
  heap.push(detail::kronrod15(f, lo, hi));
  long double value = heap.top().value;
  long double error = heap.top().error;
  int intervals = 1;
  // Aim at a tenth of the tolerance; the GK estimate is not a bound.
  auto done = [&] { return error <= std::max<long double>(0.1L * rel_tol * std::abs(value), abs_floor); };
  while (!done()) {
    if (intervals >= max_intervals)
      throw std::runtime_error("integrate_adaptive: no convergence within the interval budget");
    const detail::Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const detail::Segment left = detail::kronrod15(f, worst.lo, mid);
    const detail::Segment right = detail::kronrod15(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  long double total = 0.0L, total_error = 0.0L;
  while (!heap.empty()) {
    total += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }
  return {static_cast<double>(total), static_cast<double>(total_error), intervals};
}

}  // namespace ncphase::quadrature
