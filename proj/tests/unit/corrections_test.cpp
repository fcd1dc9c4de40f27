#include "ncphase/corrections.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <vector>

using namespace ncphase;
using namespace ncphase::corrections;
using oscillator::NCParams;

namespace {

const NCParams theta_only = NCParams::moments(0.0, 1.0, 0.0);
const NCParams eta_only = NCParams::moments(0.0, 0.0, 1.0);

using Matrix = std::vector<std::vector<std::complex<double>>>;

// Angular momentum matrices in the |l m> basis, m = l, l-1, ..., -l.
std::array<Matrix, 3> angular_momentum(int l) {
  const int d = 2 * l + 1;
  Matrix lx(d, std::vector<std::complex<double>>(d)), ly = lx, lz = lx;
  for (int r = 0; r < d; ++r) {
    const double m = l - r;
    lz[r][r] = m;
    if (r + 1 < d) {
      // <m|L+|m-1> = sqrt(l(l+1) - m(m-1))
      const double up = std::sqrt(l * (l + 1.0) - m * (m - 1));
      lx[r][r + 1] = lx[r + 1][r] = up / 2;
      ly[r][r + 1] = std::complex<double>(0, -up / 2);
      ly[r + 1][r] = std::complex<double>(0, up / 2);
    }
  }
  return {lx, ly, lz};
}

// Explicit sum over intermediate states |n l m', 1_k> of
// |<n l m', 1_k| (p0/2) p^b . L |n l m, 0>|^2 / (E_0 - E_k), E_0 - E_k = -omega,
// with <1_k|p^b_k|0> = i sqrt(m_osc omega / 2). Averaged over m (the shift is
// the same for each m).
double second_order_sum_over_states(int l, double omega, double p0, double l_P) {
  const auto Ls = angular_momentum(l);
  const double m_osc = 1.0 / (omega * l_P * l_P);
  const std::complex<double> pb_matrix(0.0, std::sqrt(m_osc * omega / 2));
  const int d = 2 * l + 1;
  double total = 0.0;
  for (int m = 0; m < d; ++m) {
    double shift = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int mp = 0; mp < d; ++mp) {
        const std::complex<double> element = p0 / 2 * pb_matrix * Ls[k][mp][m];
        shift += std::norm(element) / (-omega);
      }
    total += shift;
  }
  return total / d;
}

}  // namespace

TEST(EtaCorrection, CoefficientIsSecondMomentOverTwelve) {
  for (int n = 1; n <= 15; ++n)
    for (int l = 0; l < n; ++l) {
      const Rational expected = Rational(n) * n * (5 * Rational(n) * n + 1 - 3 * Rational(l) * (l + 1)) / 24;
      EXPECT_EQ(eta_coefficient(n, l), expected);
    }
  EXPECT_EQ(eta_coefficient(1, 0), rational(1, 4));
  EXPECT_EQ(eta_coefficient(2, 0), rational(7, 2));
}

TEST(EtaCorrection, AlwaysPositive) {
  for (int n = 1; n <= 30; ++n)
    for (int l = 0; l < n; ++l) EXPECT_GT(delta_eta(n, l, eta_only), 0.0);
}

TEST(EtaCorrection, ScalesWithEtaSquared) {
  EXPECT_DOUBLE_EQ(delta_eta(4, 2, NCParams::moments(0, 0, 3.0)), 3.0 * delta_eta(4, 2, eta_only));
  EXPECT_EQ(delta_eta(4, 2, theta_only), 0.0);
}

TEST(ThetaCorrection, ThreeDLevel) {
  EXPECT_EQ(theta_bracket(3, 2), rational(1, 135));
  EXPECT_EQ(theta_coefficient(3, 2), rational(-1, 32805));
  EXPECT_DOUBLE_EQ(delta_theta(3, 2, theta_only), -1.0 / 32805);
}

TEST(ThetaCorrection, BracketPositiveSoShiftNegative) {
  for (int n = 3; n <= 20; ++n)
    for (int l = 2; l < n; ++l) {
      EXPECT_GT(theta_bracket(n, l), 0) << n << ' ' << l;
      EXPECT_LT(delta_theta(n, l, theta_only), 0.0);
    }
}

TEST(ThetaCorrection, LowAngularMomentaDiverge) {
  EXPECT_THROW(theta_bracket(3, 1), DivergentFormula);
  EXPECT_THROW(theta_bracket(3, 0), DivergentFormula);
  EXPECT_THROW(correction(3, 1, theta_only), DivergentFormula);
  EXPECT_THROW(correction(3, 3, theta_only), std::invalid_argument);
}

TEST(NsCorrection, GroundStateValue) {
  const CorrectionResult r = correction(1, 0, NCParams::moments(1.0, 0.0, 0.0));
  EXPECT_EQ(r.route, Route::ns_formula);
  EXPECT_NEAR(r.total, 1.72 * std::numbers::pi / 8, 1e-15);
  EXPECT_NEAR(r.total, 0.67544, 1e-5);
}

TEST(NsCorrection, EtaPartMatchesGenericFormula) {
  const NCParams p = NCParams::moments(0.3, 0.2, 1.7);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(delta_ns(n, p).delta_eta, delta_eta(n, 0, p));
    EXPECT_EQ(correction(n, 0, p).delta_eta, delta_eta(n, 0, p));
  }
}

TEST(NsCorrection, ThetaPartFallsAsInverseCube) {
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(ns_theta_coefficient_over_pi(n) * n * n * n, rational(43, 200));
}

TEST(Correction, TotalIsSumOfParts) {
  const NCParams p = NCParams::raw(1e-3, 2e-3, 0.5);
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l < n; ++l) {
      if (l == 1) continue;
      const CorrectionResult r = correction(n, l, p);
      EXPECT_EQ(r.total, r.delta_theta + r.delta_eta);
      EXPECT_EQ(r.route, l == 0 ? Route::ns_formula : Route::generic_l_ge_2);
    }
}

TEST(Scaling, LargeN) {
  for (int n : {40, 45, 50}) {
    const double eta_ratio = delta_eta(2 * n, 0, eta_only) / delta_eta(n, 0, eta_only);
    const double theta_ratio = delta_theta(2 * n, 2, theta_only) / delta_theta(n, 2, theta_only);
    EXPECT_NEAR(eta_ratio / 16, 1.0, 0.05) << n;
    EXPECT_NEAR(theta_ratio * 8, 1.0, 0.05) << n;
  }
}

TEST(Transition, EtaCoefficientIsExactOnBothRoutes) {
  EXPECT_EQ(ns_eta_transition(), published_eta_transition);
  const TransitionShift t = transition_shift(NCParams::moments(1.0, 0.0, 2.0));
  EXPECT_EQ(t.eta_ns, t.eta_published);
  EXPECT_DOUBLE_EQ(t.eta_published, 6.5);
}

TEST(Transition, ThetaRoutesAgreeWithinHalfPercent) {
  EXPECT_EQ(ns_theta_transition_over_pi(), rational(-43 * 7, 25 * 64));
  const TransitionShift t = transition_shift(NCParams::moments(1.0, 0.0, 0.0));
  EXPECT_LT(t.theta_relative_gap(), 0.005);
  EXPECT_GT(t.theta_relative_gap(), 0.003);
  EXPECT_LT(t.theta_published, 0.0);
  EXPECT_LT(t.theta_ns, 0.0);
}

TEST(SecondOrder, MatchesSumOverStates) {
  const double p0 = 0.02, l_P = 0.3;
  const NCParams p = NCParams::raw(0.0, p0, l_P);
  for (int l = 0; l <= 4; ++l)
    for (double omega : {0.5, 10.0, 1e6}) {
      const double oracle_value = second_order_sum_over_states(l, omega, p0, l_P);
      EXPECT_NEAR(second_order_eta_L(l + 1, l, omega, p), oracle_value, 1e-14 * std::max(1.0, std::abs(oracle_value)));
    }
}

TEST(SecondOrder, FallsAsInverseFrequency) {
  const NCParams p = NCParams::moments(0, 0, 1.0);
  for (double omega = 1.0; omega <= 1e5; omega *= 10) {
    const double ratio = second_order_eta_L(3, 2, 2 * omega, p) / second_order_eta_L(3, 2, omega, p);
    EXPECT_NEAR(ratio, 0.5, 1e-12);
  }
  EXPECT_LT(std::abs(second_order_eta_L(3, 2, 1e12, p)), 1e-10 * delta_eta(3, 2, p));
  EXPECT_EQ(second_order_eta_L(2, 0, 1.0, p), 0.0);
  EXPECT_THROW(second_order_eta_L(2, 1, 0.0, p), std::invalid_argument);
}

TEST(FirstOrder, LinearTermsVanishInOscillatorGroundState) {
  const FirstOrderReport r = first_order_vanishing_check(NCParams::raw(1e-2, 1e-2, 0.5));
  EXPECT_TRUE(r.vanishes(1e-12));
}

TEST(FirstOrder, CheckDetectsABiasedOracle) {
  const FirstMomentOracle biased = [](const NCParams&) {
    oscillator::oracle::FirstMoments m;
    m.eta[2] = 1e-6;
    return m;
  };
  const FirstOrderReport r = first_order_vanishing_check(NCParams::raw(1e-2, 1e-2, 0.5), biased);
  EXPECT_FALSE(r.vanishes(1e-12));
  EXPECT_NEAR(std::abs(r.eta_term), 0.5e-6 * 3, 1e-18);
}
