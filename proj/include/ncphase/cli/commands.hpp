#pragma once

#include "ncphase/algebra/suite.hpp"
#include "ncphase/bounds.hpp"
#include "ncphase/cli/config.hpp"
#include "ncphase/cli/format.hpp"
#include "ncphase/corrections.hpp"
#include "ncphase/errors.hpp"
#include "ncphase/hydrogen.hpp"

#include <json.hpp>

#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ncphase::cli {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2, exit_domain = 3 };

inline constexpr int scan_n_max_limit = 50;

/// Runs `body` and maps exceptions onto the exit-code contract, writing the
/// message to `err`.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

namespace detail {

inline void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

inline double energy_in(const RunConfig& cfg, double hartree) {
  return cfg.units == Units::si ? cfg.constants.hartree_to_joule(hartree) : hartree;
}

inline const char* energy_unit(const RunConfig& cfg) { return cfg.units == Units::si ? "J" : "hartree"; }

inline nlohmann::json params_json(const oscillator::NCParams& p) {
  return {{"theta_tilde", p.theta_tilde()}, {"theta_sq_tilde", p.theta_sq_tilde()}, {"eta_sq_tilde", p.eta_sq_tilde()}};
}

}  // namespace detail

struct VerifyOptions {
  bool mutate_representation = false;
};

/// Full algebra suite. Exit 0 iff every identity holds.
inline int cmd_verify(const RunConfig& cfg, const VerifyOptions& opts, std::ostream& out) {
  algebra::SuiteOptions so;
  so.seed = cfg.seed;
  if (opts.mutate_representation) so.representation.p_scale = -1;
  const algebra::SuiteReport report = algebra::run_algebra_suite(so);

  switch (cfg.output_or(OutputFormat::text)) {
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : report.entries) arr.push_back({{"id", e.id}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"pass", e.pass}});
      detail::write_json(out, arr);
      break;
    }
    case OutputFormat::csv:
      out << "id,lhs,rhs,pass\n";
      for (const auto& e : report.entries)
        out << csv_field(e.id) << ',' << csv_field(e.lhs) << ',' << csv_field(e.rhs) << ','
            << (e.pass ? "true" : "false") << '\n';
      break;
    case OutputFormat::text:
      for (const auto& e : report.entries)
        out << (e.pass ? "PASS " : "FAIL ") << e.id << ": " << e.lhs << " = " << e.rhs << '\n';
      out << report.entries.size() - report.failures() << '/' << report.entries.size() << " identities hold\n";
      break;
  }
  return report.all_passed() ? exit_ok : exit_verify_failed;
}

/// Energy shift of one level.
inline int cmd_correction(int n, int l, const RunConfig& cfg, std::ostream& out) {
  const hydrogen::QuantumNumbers q(n, l);
  const oscillator::NCParams params = cfg.params();
  const corrections::CorrectionResult r = corrections::correction(q.n(), q.l(), params);

  switch (cfg.output_or(OutputFormat::json)) {
    case OutputFormat::json: {
      nlohmann::json j = {{"n", r.n},
                          {"l", r.l},
                          {"route", corrections::route_name(r.route)},
                          {"params", detail::params_json(params)},
                          {"hartree",
                           {{"unit", "hartree"},
                            {"delta_theta", r.delta_theta},
                            {"delta_eta", r.delta_eta},
                            {"total", r.total}}}};
      if (cfg.units == Units::si)
        j["si"] = {{"unit", "J"},
                   {"delta_theta", cfg.constants.hartree_to_joule(r.delta_theta)},
                   {"delta_eta", cfg.constants.hartree_to_joule(r.delta_eta)},
                   {"total", cfg.constants.hartree_to_joule(r.total)}};
      detail::write_json(out, j);
      break;
    }
    case OutputFormat::csv:
      out << "n,l,delta_theta,delta_eta,total,route,unit\n";
      out << r.n << ',' << r.l << ',' << format_number(r.delta_theta) << ',' << format_number(r.delta_eta) << ','
          << format_number(r.total) << ',' << corrections::route_name(r.route) << ",hartree\n";
      if (cfg.units == Units::si)
        out << r.n << ',' << r.l << ',' << format_number(cfg.constants.hartree_to_joule(r.delta_theta)) << ','
            << format_number(cfg.constants.hartree_to_joule(r.delta_eta)) << ','
            << format_number(cfg.constants.hartree_to_joule(r.total)) << ',' << corrections::route_name(r.route)
            << ",J\n";
      break;
    case OutputFormat::text:
      out << "level n=" << r.n << " l=" << r.l << " (" << corrections::route_name(r.route) << ")\n";
      out << "  delta_theta = " << format_number(r.delta_theta) << " hartree\n";
      out << "  delta_eta   = " << format_number(r.delta_eta) << " hartree\n";
      out << "  total       = " << format_number(r.total) << " hartree\n";
      if (cfg.units == Units::si) out << "  total       = " << format_number(cfg.constants.hartree_to_joule(r.total)) << " J\n";
      break;
  }
  return exit_ok;
}

struct ScanRow {
  int n = 0;
  int l = 0;
  bool supported = true;
  double delta_theta = 0.0;  ///< meaningless when !supported
  double delta_eta = 0.0;
  double total = 0.0;
  std::string route;
};

/// Every level with n <= n_max, ordered by (n, l). Energies in the configured
/// units. The theta part has no finite value for l = 1, so those rows carry
/// only the eta part.
inline std::vector<ScanRow> scan_levels(int n_max, const RunConfig& cfg) {
  if (n_max < 1 || n_max > scan_n_max_limit)
    throw std::invalid_argument("n-max must lie in [1, " + std::to_string(scan_n_max_limit) + "]");
  const oscillator::NCParams params = cfg.params();
  std::vector<ScanRow> rows;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l < n; ++l) {
      ScanRow row;
      row.n = n;
      row.l = l;
      if (l == 1) {
        row.supported = false;
        row.route = "unsupported";
        row.delta_eta = detail::energy_in(cfg, corrections::delta_eta(n, l, params));
        row.total = row.delta_eta;
      } else {
        const corrections::CorrectionResult r = corrections::correction(n, l, params);
        row.route = corrections::route_name(r.route);
        row.delta_theta = detail::energy_in(cfg, r.delta_theta);
        row.delta_eta = detail::energy_in(cfg, r.delta_eta);
        row.total = detail::energy_in(cfg, r.total);
      }
      rows.push_back(row);
    }
  return rows;
}

inline int cmd_scan(int n_max, const RunConfig& cfg, std::ostream& out) {
  const std::vector<ScanRow> rows = scan_levels(n_max, cfg);
  switch (cfg.output_or(OutputFormat::csv)) {
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"n", r.n},
                       {"l", r.l},
                       {"delta_theta", r.supported ? nlohmann::json(r.delta_theta) : nlohmann::json(nullptr)},
                       {"delta_eta", r.delta_eta},
                       {"total", r.total},
                       {"route", r.route},
                       {"unit", detail::energy_unit(cfg)}});
      detail::write_json(out, arr);
      break;
    }
    case OutputFormat::csv:
      out << "n,l,delta_theta,delta_eta,total,route\n";
      for (const auto& r : rows)
        out << r.n << ',' << r.l << ',' << (r.supported ? format_number(r.delta_theta) : "") << ','
            << format_number(r.delta_eta) << ',' << format_number(r.total) << ',' << r.route << '\n';
      break;
    case OutputFormat::text:
      out << "energies in " << detail::energy_unit(cfg) << '\n';
      for (const auto& r : rows)
        out << "n=" << r.n << " l=" << r.l << "  delta_theta=" << (r.supported ? format_number(r.delta_theta) : "n/a")
            << "  delta_eta=" << format_number(r.delta_eta) << "  total=" << format_number(r.total) << "  ["
            << r.route << "]\n";
      break;
  }
  return exit_ok;
}

/// Relative mismatch between the budget and the shift reproduced by
/// substituting each bound back into its inequality.
struct BoundRoundTrip {
  double theta = 0.0;
  double eta = 0.0;
};

inline BoundRoundTrip bound_round_trip(const bounds::BoundResult& r) {
  const double e = bounds::transition_energy();
  const double theta_shift = bounds::theta_transition_coefficient(r.options.theta_route) * r.theta.theta_tilde;
  const double eta_shift = to_double(corrections::published_eta_transition) * r.eta.eta_tilde * r.eta.eta_tilde;
  const double theta_target = r.options.theta_fraction * r.options.rel_accuracy;
  const double eta_target = r.options.eta_fraction * r.options.rel_accuracy;
  return {std::abs(theta_shift / e / theta_target - 1.0), std::abs(eta_shift / e / eta_target - 1.0)};
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const bounds::BoundResult r = bounds::estimate_bounds(cfg.bound_options(), cfg.constants);
  const BoundRoundTrip rt = bound_round_trip(r);
  const char* route = r.options.theta_route == bounds::ThetaRoute::published ? "published" : "ns";

  switch (cfg.output_or(OutputFormat::json)) {
    case OutputFormat::json:
      detail::write_json(out, {{"rel_accuracy", r.options.rel_accuracy},
                               {"theta_budget", r.options.theta_fraction},
                               {"eta_budget", r.options.eta_fraction},
                               {"theta_route", route},
                               {"theta",
                                {{"theta_tilde", r.theta.theta_tilde},
                                 {"hbar_theta_m2", r.theta.hbar_theta_m2},
                                 {"published_value_m2", bounds::published_theta_bound_m2},
                                 {"paper_order_match", r.theta_published_order_match},
                                 {"round_trip_rel_error", rt.theta}}},
                               {"eta",
                                {{"eta_tilde", r.eta.eta_tilde},
                                 {"hbar_sqrt_eta_si", r.eta.hbar_sqrt_eta_si},
                                 {"published_value_si", bounds::published_eta_bound_si},
                                 {"paper_value_discrepancy", r.eta_published_value_discrepancy},
                                 {"round_trip_rel_error", rt.eta}}}});
      break;
    case OutputFormat::csv:
      out << "quantity,dimensionless,si,si_unit,published_si,published_flag\n";
      out << "hbar_theta," << format_number(r.theta.theta_tilde) << ',' << format_number(r.theta.hbar_theta_m2)
          << ",m^2," << format_number(bounds::published_theta_bound_m2) << ",order_match="
          << (r.theta_published_order_match ? "true" : "false") << '\n';
      out << "hbar_sqrt_eta," << format_number(r.eta.eta_tilde) << ',' << format_number(r.eta.hbar_sqrt_eta_si)
          << ",kg^2 m^2/s^2," << format_number(bounds::published_eta_bound_si) << ",discrepancy="
          << (r.eta_published_value_discrepancy ? "true" : "false") << '\n';
      break;
    case OutputFormat::text:
      out << "relative accuracy " << format_number(r.options.rel_accuracy) << ", theta route " << route << '\n';
      out << "hbar<theta>       <= " << format_number(r.theta.hbar_theta_m2) << " m^2 (theta_tilde "
          << format_number(r.theta.theta_tilde) << "; published 1e-36, order "
          << (r.theta_published_order_match ? "matches" : "differs") << ")\n";
      out << "hbar sqrt<eta^2>  <= " << format_number(r.eta.hbar_sqrt_eta_si) << " kg^2 m^2/s^2 (eta_tilde "
          << format_number(r.eta.eta_tilde) << "; published 1e-61, "
          << (r.eta_published_value_discrepancy ? "discrepant" : "consistent") << ")\n";
      break;
  }
  return exit_ok;
}

struct MomentReport {
  int n = 0;
  int l = 0;
  int s = 0;
  std::string exact;
  double closed_form = 0.0;
  double recursion = 0.0;
  double quadrature = 0.0;
  double relative_gap = 0.0;  ///< |quadrature - closed_form| / |closed_form|
};

inline MomentReport moment_report(int n, int l, int s, double tol = 1e-12) {
  const hydrogen::QuantumNumbers q(n, l);
  MomentReport r;
  r.n = n;
  r.l = l;
  r.s = s;
  const Rational exact = hydrogen::radial_moment(q, s);
  r.exact = to_string(exact);
  r.closed_form = to_double(exact);
  r.recursion = to_double(hydrogen::recursion_moment(q, s));
  r.quadrature = hydrogen::quadrature_moment(q, s, tol);
  r.relative_gap = std::abs(r.quadrature - r.closed_form) / std::abs(r.closed_form);
  return r;
}

/// <r^s> for one level: exact value, recursion, quadrature oracle.
inline int cmd_moment(int n, int l, int s, double tol, const RunConfig& cfg, std::ostream& out) {
  const MomentReport r = moment_report(n, l, s, tol);
  switch (cfg.output_or(OutputFormat::json)) {
    case OutputFormat::json:
      detail::write_json(out, {{"n", r.n},
                               {"l", r.l},
                               {"s", r.s},
                               {"exact", r.exact},
                               {"closed_form", r.closed_form},
                               {"recursion", r.recursion},
                               {"quadrature", r.quadrature},
                               {"relative_gap", r.relative_gap}});
      break;
    case OutputFormat::csv:
      out << "n,l,s,exact,closed_form,recursion,quadrature,relative_gap\n";
      out << r.n << ',' << r.l << ',' << r.s << ',' << r.exact << ',' << format_number(r.closed_form) << ','
          << format_number(r.recursion) << ',' << format_number(r.quadrature) << ',' << format_number(r.relative_gap)
          << '\n';
      break;
    case OutputFormat::text:
      out << "<r^" << r.s << "> for n=" << r.n << " l=" << r.l << " (a_B^" << r.s << ")\n";
      out << "  exact       " << r.exact << '\n';
      out << "  closed form " << format_number(r.closed_form) << '\n';
      out << "  recursion   " << format_number(r.recursion) << '\n';
      out << "  quadrature  " << format_number(r.quadrature) << '\n';
      out << "  rel. gap    " << format_number(r.relative_gap) << '\n';
      break;
  }
  return exit_ok;
}

}  // namespace ncphase::cli
