#pragma once

#include "ncphase/algebra/operator_expr.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace ncphase::algebra {

/// Levi-Civita symbol on 1-based axes.
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

using Vec3 = std::array<OperatorExpr, 3>;

inline Vec3 vec(Kind kind) { return {Generator(kind, 1), Generator(kind, 2), Generator(kind, 3)}; }

inline OperatorExpr dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

/// [u x v]_i = eps_ijk u_j v_k, with u to the left in every product.
inline Vec3 cross(const Vec3& u, const Vec3& v) {
  Vec3 r;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        if (int e = levi_civita(i, j, k)) r[i - 1] += ParamScalar(e) * (u[j - 1] * v[k - 1]);
  return r;
}

/// Scale factors on the noncommutative corrections in X and P. The physical
/// representation is {1, 1}; anything else is a deliberately corrupted
/// representation used to show the verification suite can fail.
struct Representation {
  Rational x_scale = 1;
  Rational p_scale = 1;
};

enum class Observable { X, P, L, L_total, theta, eta, gamma, R2, P2, H_osc_a, H_osc_b };

inline std::optional<Observable> parse_observable(std::string_view name) {
  if (name == "X") return Observable::X;
  if (name == "P") return Observable::P;
  if (name == "L") return Observable::L;
  if (name == "Ltilde" || name == "L_total") return Observable::L_total;
  if (name == "theta") return Observable::theta;
  if (name == "eta") return Observable::eta;
  if (name == "gamma") return Observable::gamma;
  if (name == "R2") return Observable::R2;
  if (name == "P2") return Observable::P2;
  if (name == "H_osc_a") return Observable::H_osc_a;
  if (name == "H_osc_b") return Observable::H_osc_b;
  return std::nullopt;
}

namespace detail {

inline void check_axis(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("observable axis must be 1, 2 or 3");
}

inline ParamScalar half_l0_over_hbar(const Representation& rep) {
  return ParamScalar(rep.x_scale / 2) * ParamScalar::l0() * ParamScalar::hbar(-1);
}

inline ParamScalar half_p0_over_hbar(const Representation& rep) {
  return ParamScalar(rep.p_scale / 2) * ParamScalar::p0() * ParamScalar::hbar(-1);
}

}  // namespace detail

/// X_i = x_i + (l0 / 2 hbar) [a x p]_i
inline OperatorExpr X(int i, const Representation& rep = {}) {
  detail::check_axis(i);
  return OperatorExpr(x(i)) + detail::half_l0_over_hbar(rep) * cross(vec(Kind::a), vec(Kind::p))[i - 1];
}

/// P_i = p_i + (p0 / 2 hbar) [r x p^b]_i
///
/// This is p_i + eta_ij x_j / 2 with eta_ij = (p0/hbar) eps_ijk p^b_k, the
/// sign for which [P_i, P_j] = i eps_ijk p0 p^b_k and
/// [X_i, P_j] = i hbar (delta_ij + gamma_ij).
inline OperatorExpr P(int i, const Representation& rep = {}) {
  detail::check_axis(i);
  return OperatorExpr(p(i)) + detail::half_p0_over_hbar(rep) * cross(vec(Kind::x), vec(Kind::pb))[i - 1];
}

/// Orbital angular momentum r x p.
inline OperatorExpr L(int i) {
  detail::check_axis(i);
  return cross(vec(Kind::x), vec(Kind::p))[i - 1];
}

/// Total angular momentum r x p + a x p^a + b x p^b, generating rotations of
/// physical and auxiliary variables together.
inline OperatorExpr L_total(int i) {
  detail::check_axis(i);
  return cross(vec(Kind::x), vec(Kind::p))[i - 1] + cross(vec(Kind::a), vec(Kind::pa))[i - 1] +
         cross(vec(Kind::b), vec(Kind::pb))[i - 1];
}

/// theta_ij = (l0/hbar) eps_ijk a_k
inline OperatorExpr theta(int i, int j) {
  detail::check_axis(i);
  detail::check_axis(j);
  OperatorExpr r;
  for (int k = 1; k <= 3; ++k)
    if (int e = levi_civita(i, j, k)) r += ParamScalar(e) * ParamScalar::l0() * ParamScalar::hbar(-1) * OperatorExpr(a(k));
  return r;
}

/// eta_ij = (p0/hbar) eps_ijk p^b_k
inline OperatorExpr eta(int i, int j) {
  detail::check_axis(i);
  detail::check_axis(j);
  OperatorExpr r;
  for (int k = 1; k <= 3; ++k)
    if (int e = levi_civita(i, j, k)) r += ParamScalar(e) * ParamScalar::p0() * ParamScalar::hbar(-1) * OperatorExpr(pb(k));
  return r;
}

/// gamma_ij = (l0 p0 / 4 hbar^2) ((a . p^b) delta_ij - a_j p^b_i)
inline OperatorExpr gamma(int i, int j) {
  detail::check_axis(i);
  detail::check_axis(j);
  OperatorExpr r = -(OperatorExpr(a(j)) * OperatorExpr(pb(i)));
  if (i == j) r += dot(vec(Kind::a), vec(Kind::pb));
  return ParamScalar(rational(1, 4)) * ParamScalar::l0() * ParamScalar::p0() * ParamScalar::hbar(-2) * r;
}

inline OperatorExpr R2(const Representation& rep = {}) {
  OperatorExpr r;
  for (int i = 1; i <= 3; ++i) r += X(i, rep) * X(i, rep);
  return r;
}

inline OperatorExpr P2(const Representation& rep = {}) {
  OperatorExpr r;
  for (int i = 1; i <= 3; ++i) r += P(i, rep) * P(i, rep);
  return r;
}

namespace detail {

// (p^2)/(2 m) + (m w^2 / 2) q^2 with m, w formal.
inline OperatorExpr oscillator_hamiltonian(Kind coordinate, Kind momentum) {
  using S = Symbol;
  const ParamScalar kinetic = ParamScalar(rational(1, 2)) * ParamScalar::symbol(S::m_osc, -1);
  const ParamScalar potential =
      ParamScalar(rational(1, 2)) * ParamScalar::symbol(S::m_osc) * ParamScalar::symbol(S::omega, 2);
  return kinetic * dot(vec(momentum), vec(momentum)) + potential * dot(vec(coordinate), vec(coordinate));
}

}  // namespace detail

inline OperatorExpr H_osc_a() { return detail::oscillator_hamiltonian(Kind::a, Kind::pa); }
inline OperatorExpr H_osc_b() { return detail::oscillator_hamiltonian(Kind::b, Kind::pb); }

/// Builds a named observable. Vector observables take one axis, tensors two,
/// scalars none; a missing or out-of-range axis throws std::invalid_argument.
inline OperatorExpr build_observable(Observable name, std::optional<int> i = std::nullopt,
                                     std::optional<int> j = std::nullopt, const Representation& rep = {}) {
  auto need = [](std::optional<int> axis) {
    if (!axis) throw std::invalid_argument("observable requires an axis");
    return *axis;
  };
  switch (name) {
    case Observable::X: return X(need(i), rep);
    case Observable::P: return P(need(i), rep);
    case Observable::L: return L(need(i));
    case Observable::L_total: return L_total(need(i));
    case Observable::theta: return theta(need(i), need(j));
    case Observable::eta: return eta(need(i), need(j));
    case Observable::gamma: return gamma(need(i), need(j));
    case Observable::R2: return R2(rep);
    case Observable::P2: return P2(rep);
    case Observable::H_osc_a: return H_osc_a();
    case Observable::H_osc_b: return H_osc_b();
  }
  throw std::invalid_argument("unknown observable");
}

inline OperatorExpr build_observable(std::string_view name, std::optional<int> i = std::nullopt,
                                     std::optional<int> j = std::nullopt, const Representation& rep = {}) {
  auto id = parse_observable(name);
  if (!id) throw std::invalid_argument("unknown observable: " + std::string(name));
  return build_observable(*id, i, j, rep);
}

}  // namespace ncphase::algebra
