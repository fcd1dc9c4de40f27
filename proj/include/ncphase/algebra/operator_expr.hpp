#pragma once

#include "ncphase/algebra/generator.hpp"
#include "ncphase/algebra/param_scalar.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncphase::algebra {

using Word = std::vector<Generator>;

/// Longest word the engine will produce. Every identity we check stays well
/// below this; hitting it means runaway rewriting.
inline constexpr std::size_t max_word_length = 16;

/// A product coeff * g1 * g2 * ... in arbitrary (not necessarily normal) order.
struct RawTerm {
  ParamScalar coeff;
  Word word;
};

/// Element of the universal enveloping algebra of the 18 canonical
/// generators, kept in normal-ordered canonical form: every word sorted by
/// the canonical generator order, like terms merged, zero terms dropped.
class OperatorExpr {
 public:
  using Terms = std::map<Word, ParamScalar>;

  OperatorExpr() = default;
  OperatorExpr(ParamScalar c) { add(Word{}, c); }
  OperatorExpr(long long c) : OperatorExpr(ParamScalar(c)) {}
  OperatorExpr(Generator g) { add(Word{g}, ParamScalar(1)); }

  static OperatorExpr identity() { return OperatorExpr(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest word length among the terms.
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
  }

  OperatorExpr& operator+=(const OperatorExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  OperatorExpr& operator-=(const OperatorExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator-(const OperatorExpr& a) { return OperatorExpr() - a; }

  friend OperatorExpr operator*(const ParamScalar& s, const OperatorExpr& e) {
    OperatorExpr r;
    for (const auto& [w, c] : e.terms_) r.add(w, s * c);
    return r;
  }
  friend OperatorExpr operator*(const OperatorExpr& e, const ParamScalar& s) { return s * e; }

  /// Normal-ordered product.
  friend OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs) {
    OperatorExpr r;
    for (const auto& [w, c] : rhs.terms_) {
      OperatorExpr partial = lhs;
      for (Generator g : w) partial = partial.times(g);
      r += c * partial;
    }
    return r;
  }
  OperatorExpr& operator*=(const OperatorExpr& o) { return *this = *this * o; }

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  /// Substitutes zero for a formal parameter in every coefficient.
  OperatorExpr with_zero(Symbol s) const {
    OperatorExpr r;
    for (const auto& [w, c] : terms_) r.add(w, c.with_zero(s));
    return r;
  }

  /// Linear syntax: terms joined by " + " / " - ", factors by "*", e.g.
  /// "(1/2)*i*l0*a3" or "x1*p1 - i*hbar". Multi-term coefficients are
  /// parenthesised.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string t = term_string(w, c);
      if (first) {
        out = t;
        first = false;
      } else if (t[0] == '-') {
        out += " - " + t.substr(1);
      } else {
        out += " + " + t;
      }
    }
    return out;
  }

  void add(const Word& w, const ParamScalar& c) {
    if (c.is_zero()) return;
    if (w.size() > max_word_length) throw std::length_error("operator word exceeds the degree cap of 16");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  // Right-multiplies by a single generator. For a sorted word A*B with every
  // element of B greater than g:
  //   A*B*g = A*g*B + sum_j A*(B without b_j)*[b_j, g]
  // and the only nonzero [b_j, g] is [p_i, x_i] = -i*hbar (and the a/b analogues).
  OperatorExpr times(Generator g) const {
    static const ParamScalar minus_i_hbar = -(ParamScalar::i() * ParamScalar::hbar());
    OperatorExpr r;
    for (const auto& [w, c] : terms_) {
      const auto split = std::upper_bound(w.begin(), w.end(), g);
      Word moved;
      moved.reserve(w.size() + 1);
      moved.insert(moved.end(), w.begin(), split);
      moved.push_back(g);
      moved.insert(moved.end(), split, w.end());
      r.add(moved, c);
      if (!g.is_coordinate()) continue;
      const Generator partner = g.conjugate();
      for (auto it = split; it != w.end(); ++it) {
        if (*it != partner) continue;
        Word reduced;
        reduced.reserve(w.size() - 1);
        reduced.insert(reduced.end(), w.begin(), it);
        reduced.insert(reduced.end(), it + 1, w.end());
        r.add(reduced, c * minus_i_hbar);
      }
    }
    return r;
  }

  static std::string word_string(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) s += "*";
      s += w[k].name();
    }
    return s;
  }

  static std::string term_string(const Word& w, const ParamScalar& c) {
    if (w.empty()) return c.is_single_term() ? c.str() : "(" + c.str() + ")";
    const std::string ws = word_string(w);
    if (!c.is_single_term()) return "(" + c.str() + ")*" + ws;
    const std::string cs = c.str();
    if (cs == "1") return ws;
    if (cs == "-1") return "-" + ws;
    return cs + "*" + ws;
  }

  Terms terms_;
};

/// Normal-orders a sum of arbitrarily ordered products by swapping adjacent
/// out-of-order generators with the canonical commutation relations.
inline OperatorExpr canonicalize(std::span<const RawTerm> raw) {
  OperatorExpr r;
  for (const auto& t : raw) {
    if (t.word.size() > max_word_length) throw std::length_error("operator word exceeds the degree cap of 16");
    OperatorExpr product = OperatorExpr(t.coeff);
    for (Generator g : t.word) product *= OperatorExpr(g);
    r += product;
  }
  return r;
}

inline OperatorExpr canonicalize(std::initializer_list<RawTerm> raw) {
  return canonicalize(std::span<const RawTerm>(raw.begin(), raw.size()));
}

/// Re-runs normal ordering on an expression's own terms. Always returns the
/// input unchanged for a well-formed OperatorExpr.
inline OperatorExpr canonicalize(const OperatorExpr& e) {
  std::vector<RawTerm> raw;
  raw.reserve(e.terms().size());
  for (const auto& [w, c] : e.terms()) raw.push_back({c, w});
  return canonicalize(std::span<const RawTerm>(raw));
}

inline OperatorExpr multiply(const OperatorExpr& lhs, const OperatorExpr& rhs) { return lhs * rhs; }

inline OperatorExpr commutator(const OperatorExpr& lhs, const OperatorExpr& rhs) {
  return lhs * rhs - rhs * lhs;
}

/// [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
inline OperatorExpr jacobi_defect(const OperatorExpr& a, const OperatorExpr& b, const OperatorExpr& c) {
  return commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
}

inline bool verify_relation(const OperatorExpr& lhs, const OperatorExpr& rhs) { return lhs == rhs; }

}  // namespace ncphase::algebra
