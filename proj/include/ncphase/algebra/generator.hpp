#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncphase::algebra {

/// Families of canonical variables. The enumerator order is the canonical
/// normal order: all coordinates first, then all momenta.
enum class Kind : std::uint8_t { x, a, b, p, pa, pb };

inline constexpr std::array<std::string_view, 6> kind_names{"x", "a", "b", "p", "pa", "pb"};

/// One of the 18 Heisenberg generators x_i, a_i, b_i, p_i, p^a_i, p^b_i.
///
/// Represented by its rank in the canonical order
///   x1 < x2 < x3 < a1 < ... < b3 < p1 < ... < pa1 < ... < pb3
/// so that comparison of generators is comparison of ranks.
class Generator {
 public:
  static constexpr int count = 18;

  constexpr Generator() = default;
  constexpr Generator(Kind kind, int axis) : rank_(make_rank(kind, axis)) {}

  static constexpr Generator from_rank(int rank) {
    if (rank < 0 || rank >= count) throw std::out_of_range("generator rank out of range");
    Generator g;
    g.rank_ = static_cast<std::uint8_t>(rank);
    return g;
  }

  constexpr int rank() const { return rank_; }
  constexpr Kind kind() const { return static_cast<Kind>(rank_ / 3); }
  /// 1-based axis
  constexpr int axis() const { return rank_ % 3 + 1; }
  constexpr bool is_coordinate() const { return rank_ < 9; }

  /// The canonically conjugate partner (x_i <-> p_i, a_i <-> pa_i, b_i <-> pb_i).
  constexpr Generator conjugate() const { return from_rank(is_coordinate() ? rank_ + 9 : rank_ - 9); }

  std::string name() const { return std::string(kind_names[rank_ / 3]) + std::to_string(axis()); }

  friend constexpr auto operator<=>(Generator, Generator) = default;

 private:
  static constexpr std::uint8_t make_rank(Kind kind, int axis) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("generator axis must be 1, 2 or 3");
    return static_cast<std::uint8_t>(static_cast<int>(kind) * 3 + axis - 1);
  }

  std::uint8_t rank_ = 0;
};

constexpr Generator x(int i) { return {Kind::x, i}; }
constexpr Generator a(int i) { return {Kind::a, i}; }
constexpr Generator b(int i) { return {Kind::b, i}; }
constexpr Generator p(int i) { return {Kind::p, i}; }
constexpr Generator pa(int i) { return {Kind::pa, i}; }
constexpr Generator pb(int i) { return {Kind::pb, i}; }

}  // namespace ncphase::algebra
