// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance [path/to/ncphase]
// With the executable path, criterion 9 runs the real CLI twice per command;
// without it, the command functions are run in-process.

#include "ncphase/ncphase.hpp"
#include "ncphase/cli/commands.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace ncphase;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Outcome algebra_suite() {
  const auto start = std::chrono::steady_clock::now();
  const algebra::SuiteReport report = algebra::run_algebra_suite();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t random = 0;
  for (const auto& e : report.entries) random += e.id.rfind("jacobi.random.", 0) == 0;
  const bool pass = report.all_passed() && random == 200 && seconds < 60.0;
  return {pass, std::to_string(report.entries.size() - report.failures()) + "/" + std::to_string(report.entries.size()) +
                    " identities exact (" + std::to_string(random) + " random Jacobi triplets), " + fmt(seconds) +
                    " s"};
}

Outcome oscillator_moments() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> exponent(-10.0, 2.0);
  double worst = 0.0, worst_ratio = 0.0;
  const auto r2 = [](double u, double v, double w) { return u * u + v * v + w * w; };
  for (int k = 0; k < 20; ++k) {
    const double l0 = std::pow(10.0, exponent(rng)), p0 = std::pow(10.0, exponent(rng));
    const double l_P = k == 0 ? codata2018.planck_length_bohr() : std::pow(10.0, exponent(rng) / 2);
    const auto p = oscillator::NCParams::raw(l0, p0, l_P);
    const double var_a = l_P * l_P / 2, var_pb = 1 / (2 * l_P * l_P);
    worst = std::max({worst, rel_gap(oscillator::theta_mean(p), l0 * oscillator::oracle::gaussian_mean_norm(var_a)),
                      rel_gap(oscillator::theta_sq_mean(p), l0 * l0 * oscillator::oracle::gaussian_average(var_a, r2)),
                      rel_gap(oscillator::eta_sq_mean(p), p0 * p0 * oscillator::oracle::gaussian_average(var_pb, r2))});
    const double t = p.theta_tilde();
    worst_ratio = std::max(worst_ratio, rel_gap(p.theta_sq_tilde() / (t * t), 3 * std::numbers::pi / 8));
  }
  return {worst < 1e-10 && worst_ratio < 1e-12,
          "20 sets, worst oracle gap " + fmt(worst) + ", 3pi/8 ratio gap " + fmt(worst_ratio)};
}

Outcome hydrogen_moments() {
  double worst = 0.0;
  int cases = 0;
  bool exact = true;
  for (int n = 1; n <= 10; ++n)
    for (int l = 0; l < n; ++l) {
      const hydrogen::QuantumNumbers q(n, l);
      const Rational r2 = Rational(n) * n * (5 * Rational(n) * n + 1 - 3 * Rational(l) * (l + 1)) / 2;
      exact = exact && hydrogen::radial_moment(q, 2) == r2 && hydrogen::r2_expectation(n, l) == r2;
      for (int s = -3; s <= 6; ++s) {
        if (!hydrogen::moment_converges(l, s)) continue;
        const double closed = to_double(hydrogen::radial_moment(q, s));
        const double recursion = to_double(hydrogen::recursion_moment(q, s));
        const double quad = hydrogen::quadrature_moment(q, s);
        worst = std::max({worst, rel_gap(closed, recursion), rel_gap(closed, quad), rel_gap(recursion, quad)});
        ++cases;
      }
    }
  return {worst < 1e-10 && exact,
          std::to_string(cases) + " (n,l,s) cases, worst gap " + fmt(worst) + ", <r^2> exact: " + (exact ? "yes" : "no")};
}

Outcome correction_formulas() {
  const auto theta_only = oscillator::NCParams::moments(0, 1, 0);
  const bool three_d = corrections::theta_bracket(3, 2) == rational(1, 135) &&
                       corrections::theta_coefficient(3, 2) == rational(-1, 32805) &&
                       corrections::delta_theta(3, 2, theta_only) == -1.0 / 32805;
  const auto p = oscillator::NCParams::moments(0.7, 0.4, 1.3);
  bool ns_match = true;
  for (int n = 1; n <= 10; ++n) ns_match = ns_match && corrections::delta_eta(n, 0, p) == corrections::delta_ns(n, p).delta_eta;
  const auto report = corrections::first_order_vanishing_check(oscillator::NCParams::raw(1e-2, 1e-2, 0.5));
  const double first = std::max(std::abs(report.eta_term), std::abs(report.theta_term));
  return {three_d && ns_match && first < 1e-12, std::string("3d coefficient -1/32805: ") + (three_d ? "yes" : "no") +
                                                    ", ns eta parts equal: " + (ns_match ? "yes" : "no") +
                                                    ", first-order terms " + fmt(first)};
}

Outcome asymptotic_scaling() {
  const auto eta_only = oscillator::NCParams::moments(0, 0, 1), theta_only = oscillator::NCParams::moments(0, 1, 0);
  double worst_eta = 0.0, worst_theta = 0.0;
  for (int n = 40; n <= 60; ++n) {
    worst_eta = std::max(worst_eta, std::abs(corrections::delta_eta(2 * n, 0, eta_only) /
                                                 corrections::delta_eta(n, 0, eta_only) / 16 - 1));
    worst_theta = std::max(worst_theta, std::abs(corrections::delta_theta(2 * n, 2, theta_only) /
                                                     corrections::delta_theta(n, 2, theta_only) * 8 - 1));
  }
  return {worst_eta < 0.05 && worst_theta < 0.05,
          "n = 40..60, eta ratio off 16 by " + fmt(worst_eta) + ", theta ratio off 1/8 by " + fmt(worst_theta)};
}

Outcome second_order() {
  const auto p = oscillator::NCParams::raw(0.0, 1e-3, 0.5);
  double worst = 0.0, worst_size = 0.0;
  for (int n = 2; n <= 5; ++n)
    for (int l = 1; l < n; ++l) {
      for (double omega = 1.0; omega <= 1e5; omega *= 10)
        worst = std::max(worst, std::abs(corrections::second_order_eta_L(n, l, 2 * omega, p) /
                                             corrections::second_order_eta_L(n, l, omega, p) * 2 - 1));
      worst_size = std::max(worst_size, std::abs(corrections::second_order_eta_L(n, l, 1e12, p)) /
                                            corrections::delta_eta(n, l, p));
    }
  return {worst < 1e-12 && worst_size < 1e-10,
          "halving error " + fmt(worst) + " over omega 1..1e5, |E2|/E1 at omega=1e12: " + fmt(worst_size)};
}

Outcome transition_shift() {
  const bool eta_exact = corrections::ns_eta_transition() == corrections::published_eta_transition &&
                         corrections::published_eta_transition == rational(13, 4);
  const auto t = corrections::transition_shift(oscillator::NCParams::moments(1, 0, 1));
  const double gap = t.theta_relative_gap();
  return {eta_exact && t.eta_ns == t.eta_published && gap < 0.005,
          std::string("eta 13/4 on both routes: ") + (eta_exact ? "yes" : "no") + ", theta routes differ by " +
              fmt(100 * gap) + "%"};
}

Outcome bound_reproduction() {
  const bounds::BoundResult r = bounds::estimate_bounds();
  const cli::BoundRoundTrip rt = cli::bound_round_trip(r);
  const double theta = r.theta.hbar_theta_m2;
  const bool pass = theta >= 1e-36 && theta <= 1e-35 && r.theta_published_order_match && rt.eta < 1e-12 &&
                    rt.theta < 1e-12 && r.eta_published_value_discrepancy;
  return {pass, "hbar<theta> <= " + fmt(theta) + " m^2; hbar sqrt<eta^2> <= " + fmt(r.eta.hbar_sqrt_eta_si) +
                    " kg^2 m^2/s^2 (round trip " + fmt(rt.eta) + ", flagged against published 1e-61: " +
                    (r.eta_published_value_discrepancy ? "yes" : "no") + ")"};
}

std::string run_process(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  return out;
}

Outcome determinism(const std::string& executable) {
  std::vector<std::function<std::string()>> runs;
  if (!executable.empty()) {
    runs.push_back([&] { return run_process("'" + executable + "' verify"); });
    runs.push_back([&] { return run_process("'" + executable + "' scan --n-max 10"); });
  } else {
    runs.push_back([] {
      std::ostringstream os;
      cli::cmd_verify(cli::RunConfig{}, {}, os);
      return os.str();
    });
    runs.push_back([] {
      std::ostringstream os;
      cli::cmd_scan(10, cli::RunConfig{}, os);
      return os.str();
    });
  }
  bool pass = true;
  std::size_t bytes = 0;
  for (const auto& run : runs) {
    const std::string a = run(), b = run();
    pass = pass && !a.empty() && a == b;
    bytes += a.size();
  }
  return {pass, std::string(executable.empty() ? "in-process" : "executable") + ", verify and scan --n-max 10 " +
                    (pass ? "byte-identical" : "differ") + " (" + std::to_string(bytes) + " bytes)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string executable = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"algebra suite", algebra_suite},
      {"oscillator moments", oscillator_moments},
      {"hydrogen moments", hydrogen_moments},
      {"correction formulas", correction_formulas},
      {"asymptotic scalings", asymptotic_scaling},
      {"second-order vanishing", second_order},
      {"transition shift consistency", transition_shift},
      {"bound reproduction", bound_reproduction},
      {"determinism", [&] { return determinism(executable); }},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << ": " << o.detail << '\n';
  }
  std::cout << criteria.size() - failures << '/' << criteria.size() << " criteria met\n";
  return failures == 0 ? 0 : 1;
}
