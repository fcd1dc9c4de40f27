#include "ncphase/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace ncphase;
using namespace ncphase::bounds;

namespace {

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST(Bounds, TransitionEnergyMatchesMeasuredFrequency) {
  EXPECT_DOUBLE_EQ(transition_energy(), 0.375);
  const TransitionReference ref = transition_reference();
  EXPECT_NEAR(ref.uncertainty_hz / ref.frequency_hz, ref.rel_accuracy, 0.05e-15);
  // h f / E_h differs from 3/8 only by reduced-mass and higher-order terms.
  const double ratio = codata2018.planck_J_s * ref.frequency_hz / codata2018.hartree_J;
  EXPECT_NEAR(ratio / transition_energy(), 1.0, 1e-3);
}

TEST(Bounds, ThetaOnPublishedRouteIsTwoOverPi) {
  const ThetaBound b = bound_theta(4.5e-15, 0.5);
  EXPECT_LT(rel_gap(b.theta_tilde, 0.5 * 4.5e-15 * 2 / std::numbers::pi), 1e-15);
  EXPECT_GE(b.hbar_theta_m2, 1e-36);
  EXPECT_LE(b.hbar_theta_m2, 1e-35);
  EXPECT_EQ(decimal_order(b.hbar_theta_m2), published_theta_order);
}

TEST(Bounds, ThetaRoundTrip) {
  for (ThetaRoute route : {ThetaRoute::published, ThetaRoute::ns})
    for (double acc : {1e-16, 4.5e-15, 3e-12})
      for (double f : {0.1, 0.5, 1.0}) {
        const ThetaBound b = bound_theta(acc, f, route);
        const double shift = theta_transition_coefficient(route) * b.theta_tilde;
        EXPECT_LT(rel_gap(shift / transition_energy(), f * acc), 1e-12);
        EXPECT_LT(rel_gap(b.hbar_theta_m2 / (codata2018.bohr_radius_m * codata2018.bohr_radius_m), b.theta_tilde), 1e-12);
      }
}

TEST(Bounds, EtaRoundTrip) {
  for (double acc : {1e-16, 4.5e-15, 3e-12})
    for (double f : {0.1, 0.5, 1.0}) {
      const EtaBound b = bound_eta(acc, f);
      const double shift = 13.0 / 4 * b.eta_tilde * b.eta_tilde;
      EXPECT_LT(rel_gap(shift / transition_energy(), f * acc), 1e-12);
      const double a2 = codata2018.bohr_radius_m * codata2018.bohr_radius_m;
      const double hbar2 = codata2018.hbar_J_s * codata2018.hbar_J_s;
      EXPECT_LT(rel_gap(b.hbar_sqrt_eta_si * a2 / hbar2, b.eta_tilde), 1e-12);
    }
  EXPECT_LT(rel_gap(bound_eta(4.5e-15, 0.5).eta_tilde, std::sqrt(0.5 * 4.5e-15 * 3 / 26)), 1e-15);
}

TEST(Bounds, MonotoneInAccuracyAndBudget) {
  double prev_theta = 0.0, prev_eta = 0.0;
  for (double acc = 1e-16; acc < 1e-12; acc *= 3) {
    const double t = bound_theta(acc, 0.5).theta_tilde, e = bound_eta(acc, 0.5).eta_tilde;
    EXPECT_GT(t, prev_theta);
    EXPECT_GT(e, prev_eta);
    prev_theta = t;
    prev_eta = e;
  }
  EXPECT_LT(bound_theta(4.5e-15, 0.2).theta_tilde, bound_theta(4.5e-15, 0.8).theta_tilde);
  EXPECT_LT(bound_eta(4.5e-15, 0.2).eta_tilde, bound_eta(4.5e-15, 0.8).eta_tilde);
}

TEST(Bounds, DoublingAccuracyDoublesTheta) {
  EXPECT_LT(rel_gap(bound_theta(9e-15, 0.5).hbar_theta_m2, 2 * bound_theta(4.5e-15, 0.5).hbar_theta_m2), 1e-15);
  EXPECT_LT(rel_gap(bound_eta(9e-15, 0.5).eta_tilde, std::sqrt(2.0) * bound_eta(4.5e-15, 0.5).eta_tilde), 1e-15);
}

TEST(Bounds, CombinedShiftAtTheBoundsFillsTheBudget) {
  const BoundResult r = estimate_bounds();
  const double theta_part = theta_transition_coefficient(ThetaRoute::published) * r.theta.theta_tilde;
  const double eta_part = 13.0 / 4 * r.eta.eta_tilde * r.eta.eta_tilde;
  EXPECT_LT(rel_gap((theta_part + eta_part) / transition_energy(), 4.5e-15), 1e-12);
}

TEST(Bounds, DefaultReportFlags) {
  const BoundResult r = estimate_bounds();
  EXPECT_TRUE(r.theta_published_order_match);
  EXPECT_TRUE(r.eta_published_value_discrepancy);
  EXPECT_EQ(decimal_order(r.eta.hbar_sqrt_eta_si), -56);
  EXPECT_NEAR(r.theta.hbar_theta_m2, 4.011e-36, 0.001e-36);
}

TEST(Bounds, NsRouteIsSlightlyTighter) {
  const double published = bound_theta(4.5e-15, 0.5, ThetaRoute::published).theta_tilde;
  const double ns = bound_theta(4.5e-15, 0.5, ThetaRoute::ns).theta_tilde;
  EXPECT_LT(ns, published);
  EXPECT_LT(1 - ns / published, 0.005);
}

TEST(Bounds, RejectsBadInputs) {
  EXPECT_THROW(bound_theta(0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(bound_theta(1e-15, 0.0), std::invalid_argument);
  EXPECT_THROW(bound_eta(1e-15, 1.5), std::invalid_argument);
  EXPECT_THROW(bound_eta(-1e-15, 0.5), std::invalid_argument);
}

TEST(Bounds, ConstantsFlowIntoSIValues) {
  PhysicalConstants c;
  c.bohr_radius_m = 2 * codata2018.bohr_radius_m;
  EXPECT_LT(rel_gap(bound_theta(4.5e-15, 0.5, ThetaRoute::published, c).hbar_theta_m2,
                    4 * bound_theta(4.5e-15, 0.5).hbar_theta_m2),
            1e-15);
  EXPECT_LT(rel_gap(bound_eta(4.5e-15, 0.5, c).hbar_sqrt_eta_si, bound_eta(4.5e-15, 0.5).hbar_sqrt_eta_si / 4), 1e-15);
}
