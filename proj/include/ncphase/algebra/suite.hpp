#pragma once

#include "ncphase/algebra/observables.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace ncphase::algebra {

/// Seed of the randomized Jacobi sweep unless the caller overrides it.
inline constexpr std::uint64_t default_suite_seed = 20170513;

struct SuiteOptions {
  Representation representation{};
  /// Substitute l0 = p0 = 0 on both sides of every identity.
  bool commutative_limit = false;
  std::uint64_t seed = default_suite_seed;
  int random_triplets = 200;
};

struct SuiteEntry {
  std::string id;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.pass ? 0 : 1;
    return n;
  }
  const SuiteEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

/// Random expression over the canonical generators: 1-3 terms, words of
/// length 0-3, small Gaussian-rational coefficients times at most one of
/// hbar, l0, p0. Uses raw modulo on mt19937_64 output so the stream is the
/// same under every standard library.
inline OperatorExpr random_expression(std::mt19937_64& rng) {
  auto pick = [&rng](std::uint64_t n) { return static_cast<int>(rng() % n); };
  OperatorExpr e;
  const int terms = 1 + pick(3);
  for (int t = 0; t < terms; ++t) {
    GaussianRational c(Rational(pick(7) - 3) / Rational(1 + pick(3)), Rational(pick(3) - 1));
    if (c.is_zero()) c = GaussianRational(1);
    ParamScalar coeff(c);
    switch (pick(4)) {
      case 1: coeff *= ParamScalar::hbar(); break;
      case 2: coeff *= ParamScalar::l0(); break;
      case 3: coeff *= ParamScalar::p0(); break;
      default: break;
    }
    OperatorExpr term(coeff);
    const int length = pick(4);
    for (int k = 0; k < length; ++k) term *= OperatorExpr(Generator::from_rank(pick(Generator::count)));
    e += term;
  }
  return e;
}

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const SuiteOptions& opts) : opts_(opts) {}

  void check(std::string id, const OperatorExpr& computed, const OperatorExpr& expected) {
    OperatorExpr lhs = computed;
    OperatorExpr rhs = expected;
    if (opts_.commutative_limit) {
      lhs = lhs.with_zero(Symbol::l0).with_zero(Symbol::p0);
      rhs = rhs.with_zero(Symbol::l0).with_zero(Symbol::p0);
    }
    const bool pass = verify_relation(lhs, rhs);
    report_.entries.push_back({std::move(id), lhs.str(), rhs.str(), pass});
  }

  SuiteReport take() { return std::move(report_); }

 private:
  const SuiteOptions& opts_;
  SuiteReport report_;
};

inline std::string ax(int i) { return std::to_string(i); }
inline std::string ax(int i, int j) { return std::to_string(i) + std::to_string(j); }

inline ParamScalar i_hbar() { return ParamScalar::i() * ParamScalar::hbar(); }

}  // namespace detail

/// Checks every commutation relation, invariance property and Jacobi
/// identity of the rotationally invariant noncommutative phase space.
/// Entries come out in a fixed order; failures are entries, never throws.
inline SuiteReport run_algebra_suite(const SuiteOptions& opts = {}) {
  using detail::ax;
  detail::SuiteBuilder s(opts);
  const Representation& rep = opts.representation;
  const ParamScalar ih = detail::i_hbar();

  std::array<OperatorExpr, 3> Xs, Ps, Lt;
  for (int i = 1; i <= 3; ++i) {
    Xs[i - 1] = X(i, rep);
    Ps[i - 1] = P(i, rep);
    Lt[i - 1] = L_total(i);
  }

  // (a) noncommutative algebra
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      OperatorExpr xx, pp;
      for (int k = 1; k <= 3; ++k) {
        if (int e = levi_civita(i, j, k)) {
          xx += ParamScalar(e) * ParamScalar::i() * ParamScalar::l0() * OperatorExpr(a(k));
          pp += ParamScalar(e) * ParamScalar::i() * ParamScalar::p0() * OperatorExpr(pb(k));
        }
      }
      const OperatorExpr xp = ih * (OperatorExpr(i == j ? 1 : 0) + gamma(i, j));
      s.check("nc.[X" + ax(i) + ",X" + ax(j) + "]", commutator(Xs[i - 1], Xs[j - 1]), xx);
      s.check("nc.[X" + ax(i) + ",P" + ax(j) + "]", commutator(Xs[i - 1], Ps[j - 1]), xp);
      s.check("nc.[P" + ax(i) + ",P" + ax(j) + "]", commutator(Ps[i - 1], Ps[j - 1]), pp);
    }

  // (b) canonical commutation relations among all 18 generators
  for (int r = 0; r < Generator::count; ++r)
    for (int q = r; q < Generator::count; ++q) {
      const Generator g = Generator::from_rank(r), h = Generator::from_rank(q);
      OperatorExpr expected;
      if (g.is_coordinate() && h == g.conjugate()) expected = OperatorExpr(ih);
      s.check("ccr.[" + g.name() + "," + h.name() + "]", commutator(g, h), expected);
    }

  // mixed relations of X, P with the auxiliary variables
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      OperatorExpr xpa, pbj;
      for (int k = 1; k <= 3; ++k)
        if (int e = levi_civita(i, j, k)) {
          xpa += ParamScalar(e) * ParamScalar::i() * ParamScalar(rational(1, 2)) * ParamScalar::l0() * OperatorExpr(p(k));
          pbj += ParamScalar(e) * ParamScalar::i() * ParamScalar(rational(1, 2)) * ParamScalar::p0() * OperatorExpr(x(k));
        }
      const std::string ij = ax(i) + "," ;
      s.check("mixed.[X" + ij + "pa" + ax(j) + "]", commutator(Xs[i - 1], pa(j)), xpa);
      s.check("mixed.[P" + ij + "b" + ax(j) + "]", commutator(Ps[i - 1], b(j)), pbj);
      s.check("mixed.[X" + ij + "a" + ax(j) + "]", commutator(Xs[i - 1], a(j)), {});
      s.check("mixed.[X" + ij + "b" + ax(j) + "]", commutator(Xs[i - 1], b(j)), {});
      s.check("mixed.[X" + ij + "pb" + ax(j) + "]", commutator(Xs[i - 1], pb(j)), {});
      s.check("mixed.[P" + ij + "a" + ax(j) + "]", commutator(Ps[i - 1], a(j)), {});
      s.check("mixed.[P" + ij + "pa" + ax(j) + "]", commutator(Ps[i - 1], pa(j)), {});
      s.check("mixed.[P" + ij + "pb" + ax(j) + "]", commutator(Ps[i - 1], pb(j)), {});
    }

  // (c) tensors of noncommutativity commute with X and P
  {
    const std::array<std::pair<const char*, OperatorExpr (*)(int, int)>, 3> tensors{
        {{"theta", &theta}, {"eta", &eta}, {"gamma", &gamma}}};
    for (const auto& [name, make] : tensors)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          const OperatorExpr t = make(i, j);
          for (int k = 1; k <= 3; ++k) {
            s.check("tensor.[" + std::string(name) + ax(i, j) + ",X" + ax(k) + "]", commutator(t, Xs[k - 1]), {});
            s.check("tensor.[" + std::string(name) + ax(i, j) + ",P" + ax(k) + "]", commutator(t, Ps[k - 1]), {});
          }
        }
  }

  // (d) total angular momentum commutes with scalar products and squares
  {
    const Vec3 r = vec(Kind::x), pv = vec(Kind::p), av = vec(Kind::a), bv = vec(Kind::b), pav = vec(Kind::pa),
               pbv = vec(Kind::pb);
    const Vec3 Lv{L(1), L(2), L(3)};
    const std::vector<std::pair<std::string, OperatorExpr>> scalars{
        {"a.p", dot(av, pv)},    {"b.p", dot(bv, pv)},   {"a.b", dot(av, bv)},   {"r.a", dot(r, av)},
        {"r.b", dot(r, bv)},     {"a.L", dot(av, Lv)},   {"b.L", dot(bv, Lv)},   {"pa.L", dot(pav, Lv)},
        {"pb.L", dot(pbv, Lv)},  {"r^2", dot(r, r)},     {"p^2", dot(pv, pv)},   {"a^2", dot(av, av)},
        {"b^2", dot(bv, bv)},    {"pa^2", dot(pav, pav)}, {"pb^2", dot(pbv, pbv)}};
    for (const auto& [name, op] : scalars)
      for (int i = 1; i <= 3; ++i) s.check("scalar.[Lt" + ax(i) + "," + name + "]", commutator(Lt[i - 1], op), {});
  }

  // (e) rotational invariance of R^2 and P^2
  {
    const OperatorExpr r2 = R2(rep), p2 = P2(rep);
    for (int i = 1; i <= 3; ++i) {
      s.check("rotation.[Lt" + ax(i) + ",R^2]", commutator(Lt[i - 1], r2), {});
      s.check("rotation.[Lt" + ax(i) + ",P^2]", commutator(Lt[i - 1], p2), {});
    }
  }

  // (f) vector operators under the total angular momentum
  {
    const std::vector<std::pair<std::string, std::array<OperatorExpr, 3>>> vectors{
        {"X", Xs}, {"P", Ps}, {"a", vec(Kind::a)}, {"pa", vec(Kind::pa)}, {"b", vec(Kind::b)}, {"pb", vec(Kind::pb)}};
    for (const auto& [name, v] : vectors)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          OperatorExpr expected;
          for (int k = 1; k <= 3; ++k)
            if (int e = levi_civita(i, j, k)) expected += ParamScalar(e) * ih * v[k - 1];
          s.check("vector.[" + name + ax(i) + ",Lt" + ax(j) + "]", commutator(v[i - 1], Lt[j - 1]), expected);
        }
  }

  // auxiliary oscillators: mutually commuting and rotation invariant
  {
    const OperatorExpr ha = H_osc_a(), hb = H_osc_b();
    s.check("oscillator.[H_a,H_b]", commutator(ha, hb), {});
    for (int i = 1; i <= 3; ++i) {
      s.check("oscillator.[Lt" + ax(i) + ",H_a]", commutator(Lt[i - 1], ha), {});
      s.check("oscillator.[Lt" + ax(i) + ",H_b]", commutator(Lt[i - 1], hb), {});
    }
  }

  // (g) Jacobi identity: all multisets of three from {X1..X3, P1..P3} ...
  {
    const std::array<std::pair<std::string, OperatorExpr>, 6> ops{{{"X1", Xs[0]}, {"X2", Xs[1]}, {"X3", Xs[2]},
                                                                  {"P1", Ps[0]}, {"P2", Ps[1]}, {"P3", Ps[2]}}};
    for (std::size_t u = 0; u < ops.size(); ++u)
      for (std::size_t v = u; v < ops.size(); ++v)
        for (std::size_t w = v; w < ops.size(); ++w)
          s.check("jacobi." + ops[u].first + "," + ops[v].first + "," + ops[w].first,
                  jacobi_defect(ops[u].second, ops[v].second, ops[w].second), {});
  }
  // ... and seeded random low-degree triplets
  {
    std::mt19937_64 rng(opts.seed);
    for (int t = 0; t < opts.random_triplets; ++t) {
      const OperatorExpr e1 = random_expression(rng), e2 = random_expression(rng), e3 = random_expression(rng);
      s.check("jacobi.random." + std::to_string(t), jacobi_defect(e1, e2, e3), {});
    }
  }

  return s.take();
}

}  // namespace ncphase::algebra
