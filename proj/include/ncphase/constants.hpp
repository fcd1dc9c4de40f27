#pragma once

/// SI values used at the library boundary. Everything inside the library is
/// in Hartree atomic units; these are only needed to report SI numbers.
namespace ncphase {

/// CODATA 2018 recommended values (NIST SP 961, May 2019).
struct PhysicalConstants {
  double bohr_radius_m = 5.29177210903e-11;
  double hbar_J_s = 1.054571817e-34;
  double planck_J_s = 6.62607015e-34;
  double electron_mass_kg = 9.1093837015e-31;
  double hartree_J = 4.3597447222071e-18;
  double planck_length_m = 1.616255e-35;

  /// Planck length in Bohr radii, about 3.054e-25.
  double planck_length_bohr() const { return planck_length_m / bohr_radius_m; }
  double hartree_to_joule(double e) const { return e * hartree_J; }
};

inline constexpr PhysicalConstants codata2018{};

}  // namespace ncphase
