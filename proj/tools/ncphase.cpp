// ncphase: algebra verification, hydrogen level shifts and parameter bounds
// for rotationally invariant noncommutative phase space.

#include "ncphase/cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ncphase::cli;

struct SharedFlags {
  std::string config_path;
  std::optional<std::string> units;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  std::optional<double> l0, p0, l_P;
  std::optional<double> theta_tilde, theta_sq_tilde, eta_sq_tilde;
  std::optional<double> accuracy, budget, theta_budget, eta_budget;
  std::optional<std::string> theta_route;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--config", f.config_path, "Flat JSON config file (default: $NCPHASE_CONFIG)");
  cmd->add_option("--units", f.units, "Energy units: hartree or si");
  cmd->add_option("--output", f.output, "Output format: json, csv or text");
}

void add_nc(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--l0", f.l0, "Coordinate noncommutativity length l0 (Bohr radii)");
  cmd->add_option("--p0", f.p0, "Momentum noncommutativity scale p0 (hbar / a_B)");
  cmd->add_option("--lp", f.l_P, "Oscillator length l_P (Bohr radii; default Planck length)");
  cmd->add_option("--theta-tilde", f.theta_tilde, "hbar <theta> / a_B^2");
  cmd->add_option("--theta-sq-tilde", f.theta_sq_tilde, "hbar^2 <theta^2> / a_B^4");
  cmd->add_option("--eta-sq-tilde", f.eta_sq_tilde, "a_B^4 <eta^2> / hbar^2");
}

RunConfig resolve(const SharedFlags& f) {
  RunConfig cfg;
  std::string path = f.config_path;
  if (path.empty())
    if (const char* env = std::getenv("NCPHASE_CONFIG"); env && *env) path = env;
  if (!path.empty()) apply_config(cfg, load_config_file(path));

  nlohmann::json overrides = nlohmann::json::object();
  if (f.units) overrides["units"] = *f.units;
  if (f.output) overrides["output"] = *f.output;
  if (f.seed) overrides["seed"] = *f.seed;
  if (f.l0) overrides["l0"] = *f.l0;
  if (f.p0) overrides["p0"] = *f.p0;
  if (f.l_P) overrides["l_P"] = *f.l_P;
  if (f.theta_tilde) overrides["theta_tilde"] = *f.theta_tilde;
  if (f.theta_sq_tilde) overrides["theta_sq_tilde"] = *f.theta_sq_tilde;
  if (f.eta_sq_tilde) overrides["eta_sq_tilde"] = *f.eta_sq_tilde;
  if (f.accuracy) overrides["accuracy"] = *f.accuracy;
  if (f.budget) overrides["theta_budget"] = overrides["eta_budget"] = *f.budget;
  if (f.theta_budget) overrides["theta_budget"] = *f.theta_budget;
  if (f.eta_budget) overrides["eta_budget"] = *f.eta_budget;
  if (f.theta_route) overrides["theta_route"] = *f.theta_route;
  apply_config(cfg, overrides);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative phase space: algebra checks, hydrogen corrections, bounds", "ncphase"};
  app.require_subcommand(1);

  SharedFlags flags;
  int n = 0, l = 0, s = 0, n_max = 10;
  double tol = 1e-12;
  VerifyOptions verify_opts;

  auto* verify = app.add_subcommand("verify", "Check every identity of the algebra");
  add_shared(verify, flags);
  verify->add_option("--seed", flags.seed, "Seed for the random Jacobi triplets");
  verify->add_flag("--mutate-representation", verify_opts.mutate_representation)->group("");

  auto* correction = app.add_subcommand("correction", "First-order shift of one hydrogen level");
  add_shared(correction, flags);
  add_nc(correction, flags);
  correction->add_option("--n", n, "Principal quantum number")->required();
  correction->add_option("--l", l, "Orbital quantum number")->required();

  auto* scan = app.add_subcommand("scan", "Shifts of every level up to n-max");
  add_shared(scan, flags);
  add_nc(scan, flags);
  scan->add_option("--n-max", n_max, "Largest principal quantum number (<= 50)");

  auto* bounds = app.add_subcommand("bounds", "Upper bounds from the 1s-2s measurement");
  add_shared(bounds, flags);
  bounds->add_option("--accuracy", flags.accuracy, "Relative accuracy of the transition (default 4.5e-15)");
  bounds->add_option("--budget", flags.budget, "Fraction of the accuracy given to each parameter");
  bounds->add_option("--theta-budget", flags.theta_budget, "Fraction given to theta (default 0.5)");
  bounds->add_option("--eta-budget", flags.eta_budget, "Fraction given to eta (default 0.5)");
  bounds->add_option("--theta-route", flags.theta_route, "Transition coefficient for theta: published or ns");

  auto* moment = app.add_subcommand("moment", "Radial moment <r^s> with its quadrature cross-check");
  add_shared(moment, flags);
  moment->add_option("--n", n, "Principal quantum number")->required();
  moment->add_option("--l", l, "Orbital quantum number")->required();
  moment->add_option("--s", s, "Power of r")->required();
  moment->add_option("--tol", tol, "Relative tolerance of the quadrature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  return guarded(std::cerr, [&]() -> int {
    const RunConfig cfg = resolve(flags);
    if (verify->parsed()) return cmd_verify(cfg, verify_opts, std::cout);
    if (correction->parsed()) return cmd_correction(n, l, cfg, std::cout);
    if (scan->parsed()) return cmd_scan(n_max, cfg, std::cout);
    if (bounds->parsed()) return cmd_bounds(cfg, std::cout);
    return cmd_moment(n, l, s, tol, cfg, std::cout);
  });
}
