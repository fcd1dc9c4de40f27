#pragma once

#include "ncphase/algebra/suite.hpp"
#include "ncphase/bounds.hpp"
#include "ncphase/constants.hpp"
#include "ncphase/oscillator.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

namespace ncphase::cli {

/// Malformed configuration or usage; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Units { hartree, si };
enum class OutputFormat { json, csv, text };

/// Noncommutativity inputs as given; at most one of the two forms may carry
/// values.
struct NCInput {
  std::optional<double> l0, p0, l_P;
  std::optional<double> theta_tilde, theta_sq_tilde, eta_sq_tilde;

  bool has_raw() const { return l0 || p0 || l_P; }
  bool has_moments() const { return theta_tilde || theta_sq_tilde || eta_sq_tilde; }
};

struct RunConfig {
  Units units = Units::hartree;
  std::optional<OutputFormat> output;
  std::uint64_t seed = algebra::default_suite_seed;
  NCInput nc;
  PhysicalConstants constants = codata2018;
  std::optional<double> accuracy;
  std::optional<double> theta_budget;
  std::optional<double> eta_budget;
  bounds::ThetaRoute theta_route = bounds::ThetaRoute::published;

  OutputFormat output_or(OutputFormat fallback) const { return output.value_or(fallback); }

  /// Resolves the noncommutativity inputs. Raw and moment forms together is
  /// an error; with neither, every moment is 1 so results read as
  /// coefficients. Unset members of the chosen form are 0 (l_P defaults to
  /// the Planck length).
  oscillator::NCParams params() const {
    if (nc.has_raw() && nc.has_moments())
      throw ConfigError("give either l0/p0/l_P or theta_tilde/theta_sq_tilde/eta_sq_tilde, not both");
    try {
      if (nc.has_raw())
        return oscillator::NCParams::raw(nc.l0.value_or(0.0), nc.p0.value_or(0.0),
                                         nc.l_P.value_or(constants.planck_length_bohr()));
      if (nc.has_moments())
        return oscillator::NCParams::moments(nc.theta_tilde.value_or(0.0), nc.theta_sq_tilde.value_or(0.0),
                                             nc.eta_sq_tilde.value_or(0.0));
      return oscillator::NCParams::moments(1.0, 1.0, 1.0);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  bounds::BoundOptions bound_options() const {
    bounds::BoundOptions o;
    if (accuracy) o.rel_accuracy = *accuracy;
    if (theta_budget) o.theta_fraction = *theta_budget;
    if (eta_budget) o.eta_fraction = *eta_budget;
    o.theta_route = theta_route;
    return o;
  }
};

inline Units parse_units(const std::string& s) {
  if (s == "hartree") return Units::hartree;
  if (s == "si") return Units::si;
  throw ConfigError("units must be 'hartree' or 'si', got '" + s + "'");
}

inline OutputFormat parse_output(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw ConfigError("output must be 'json', 'csv' or 'text', got '" + s + "'");
}

inline bounds::ThetaRoute parse_theta_route(const std::string& s) {
  if (s == "published") return bounds::ThetaRoute::published;
  if (s == "ns") return bounds::ThetaRoute::ns;
  throw ConfigError("theta_route must be 'published' or 'ns', got '" + s + "'");
}

namespace detail {

inline double non_negative(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  const double d = v.get<double>();
  if (!(d >= 0.0)) throw ConfigError("config key '" + key + "' must be non-negative");
  return d;
}

inline double positive(const nlohmann::json& v, const std::string& key) {
  const double d = non_negative(v, key);
  if (d == 0.0) throw ConfigError("config key '" + key + "' must be positive");
  return d;
}

inline std::string text(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

/// Applies a flat JSON config document on top of `cfg`. Unknown keys are
/// rejected. Recognised keys:
///   units, output, seed, l0, p0, l_P, theta_tilde, theta_sq_tilde,
///   eta_sq_tilde, accuracy, theta_budget, eta_budget, theta_route,
///   constants { bohr_radius_m, hbar_J_s, planck_J_s, electron_mass_kg,
///               hartree_J, planck_length_m }
inline void apply_config(RunConfig& cfg, const nlohmann::json& doc) {
  using detail::non_negative;
  using detail::positive;
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "units") cfg.units = parse_units(detail::text(v, key));
    else if (key == "output") cfg.output = parse_output(detail::text(v, key));
    else if (key == "seed") {
      if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ConfigError("config key 'seed' must be a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    }
    else if (key == "l0") cfg.nc.l0 = non_negative(v, key);
    else if (key == "p0") cfg.nc.p0 = non_negative(v, key);
    else if (key == "l_P") cfg.nc.l_P = positive(v, key);
    else if (key == "theta_tilde") cfg.nc.theta_tilde = non_negative(v, key);
    else if (key == "theta_sq_tilde") cfg.nc.theta_sq_tilde = non_negative(v, key);
    else if (key == "eta_sq_tilde") cfg.nc.eta_sq_tilde = non_negative(v, key);
    else if (key == "accuracy") cfg.accuracy = positive(v, key);
    else if (key == "theta_budget") cfg.theta_budget = positive(v, key);
    else if (key == "eta_budget") cfg.eta_budget = positive(v, key);
    else if (key == "theta_route") cfg.theta_route = parse_theta_route(detail::text(v, key));
    else if (key == "constants") {
      if (!v.is_object()) throw ConfigError("config key 'constants' must be an object");
      for (const auto& [ck, cv] : v.items()) {
        const std::string path = "constants." + ck;
        if (ck == "bohr_radius_m") cfg.constants.bohr_radius_m = positive(cv, path);
        else if (ck == "hbar_J_s") cfg.constants.hbar_J_s = positive(cv, path);
        else if (ck == "planck_J_s") cfg.constants.planck_J_s = positive(cv, path);
        else if (ck == "electron_mass_kg") cfg.constants.electron_mass_kg = positive(cv, path);
        else if (ck == "hartree_J") cfg.constants.hartree_J = positive(cv, path);
        else if (ck == "planck_length_m") cfg.constants.planck_length_m = positive(cv, path);
        else throw ConfigError("unknown config key '" + path + "'");
      }
    }
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

inline nlohmann::json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace ncphase::cli
