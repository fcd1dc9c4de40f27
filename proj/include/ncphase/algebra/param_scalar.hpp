#pragma once

#include "ncphase/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace ncphase::algebra {

/// Formal parameters appearing in coefficients. m_osc and omega only show up
/// in the auxiliary oscillator Hamiltonians.
enum class Symbol : std::uint8_t { hbar, l0, p0, m_osc, omega };

inline constexpr std::size_t symbol_count = 5;
inline constexpr std::array<std::string_view, symbol_count> symbol_names{"hbar", "l0", "p0", "m", "w"};

/// Laurent monomial hbar^e0 * l0^e1 * p0^e2 * m^e3 * w^e4.
using SymbolPowers = std::array<std::int8_t, symbol_count>;

/// Finite sum of GaussianRational * SymbolPowers. Canonical: no zero
/// coefficients stored, so zero is the empty map.
class ParamScalar {
 public:
  using Terms = std::map<SymbolPowers, GaussianRational>;

  ParamScalar() = default;
  ParamScalar(GaussianRational c) { add_term({}, std::move(c)); }
  ParamScalar(long long c) : ParamScalar(GaussianRational(c)) {}
  ParamScalar(Rational c) : ParamScalar(GaussianRational(std::move(c))) {}

  static ParamScalar i() { return GaussianRational::i(); }
  static ParamScalar symbol(Symbol s, int power = 1) {
    SymbolPowers e{};
    e[static_cast<std::size_t>(s)] = static_cast<std::int8_t>(power);
    ParamScalar r;
    r.add_term(e, GaussianRational(1));
    return r;
  }
  static ParamScalar hbar(int power = 1) { return symbol(Symbol::hbar, power); }
  static ParamScalar l0(int power = 1) { return symbol(Symbol::l0, power); }
  static ParamScalar p0(int power = 1) { return symbol(Symbol::p0, power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SymbolPowers& powers, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(powers, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ParamScalar& operator+=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ParamScalar& operator-=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator-(const ParamScalar& a) { return ParamScalar() - a; }

  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        SymbolPowers e;
        for (std::size_t k = 0; k < symbol_count; ++k) e[k] = static_cast<std::int8_t>(ea[k] + eb[k]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }

  friend bool operator==(const ParamScalar&, const ParamScalar&) = default;

  /// Sets the given symbol to zero. Terms with a negative power of it are a
  /// logic error and throw.
  ParamScalar with_zero(Symbol s) const {
    ParamScalar r;
    const auto k = static_cast<std::size_t>(s);
    for (const auto& [e, c] : terms_) {
      if (e[k] < 0) throw std::domain_error("cannot set a symbol with negative power to zero");
      if (e[k] == 0) r.add_term(e, c);
    }
    return r;
  }

  /// Linear syntax, e.g. "(1/2)*i*l0*hbar^-1", "l0*p0 - hbar".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string t = term_string(e, c);
      if (first) {
        out = t;
        first = false;
      } else if (!t.empty() && t[0] == '-') {
        out += " - " + t.substr(1);
      } else {
        out += " + " + t;
      }
    }
    return out;
  }

  /// True when the scalar is a single term, so it can be printed as a factor
  /// without parentheses.
  bool is_single_term() const { return terms_.size() == 1; }

 private:
  static std::string term_string(const SymbolPowers& e, const GaussianRational& c) {
    if ((c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0)) return "-" + term_string(e, -c);
    std::string syms;
    for (std::size_t k = 0; k < symbol_count; ++k) {
      if (e[k] == 0) continue;
      if (!syms.empty()) syms += "*";
      syms += symbol_names[k];
      if (e[k] != 1) syms += "^" + std::to_string(e[k]);
    }
    if (syms.empty()) return c.str();
    if (c == GaussianRational(1)) return syms;
    return c.str() + "*" + syms;
  }

  Terms terms_;
};

}  // namespace ncphase::algebra
