#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "eqtriples/group.hpp"

namespace eqtriples {

// An exact element a + b·√2 of ℤ[√2].  The order-16 dihedral character
// table contains ±√2, and the "not a character" / "not an integer" error
// paths need exact arithmetic to be trustworthy.
struct Root2 {
  long long a = 0;
  long long b = 0;

  constexpr Root2() = default;
  constexpr Root2(long long a_, long long b_ = 0) : a(a_), b(b_) {}

  friend constexpr Root2 operator+(Root2 x, Root2 y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr Root2 operator-(Root2 x, Root2 y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr Root2 operator*(Root2 x, Root2 y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend constexpr bool operator==(const Root2&, const Root2&) = default;

  constexpr bool is_integer() const { return b == 0; }
  double approx() const;
  std::string to_string() const;  // "3", "-2+√2" style: "a+b*sqrt(2)"
};

// The 7 conjugacy classes of the dihedral group of order 16, in the fixed
// order used by every 7-vector in this module.
inline constexpr int kD8ClassCount = 7;
extern const std::array<const char*, kD8ClassCount> kD8ClassNames;  // element expressions
extern const std::array<int, kD8ClassCount> kD8ClassSizes;          // 1,4,4,2,2,2,1

// A class function on the order-16 dihedral group: one exact value per
// conjugacy class.
struct CharacterVector {
  std::array<Root2, kD8ClassCount> values{};

  Root2 at_identity() const { return values[0]; }
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

// Irreducible characters: four 1-dimensional (A0..A3), three 2-dimensional
// (E1, E2, F), in this order.
inline constexpr int kD8IrrepCount = 7;
extern const std::array<const char*, kD8IrrepCount> kD8IrrepNames;
const std::array<CharacterVector, kD8IrrepCount>& d8_character_table();

// Multiplicities of the irreducibles in a representation V:
//   V = a0·A0 + a1·A1 + a2·A2 + a3·A3 + e1·E1 + e2·E2 + f·F.
struct IsotypicMultiplicities {
  int a0 = 0, a1 = 0, a2 = 0, a3 = 0, e1 = 0, e2 = 0, f = 0;

  std::array<int, kD8IrrepCount> as_array() const { return {a0, a1, a2, a3, e1, e2, f}; }
  static IsotypicMultiplicities from_array(const std::array<int, kD8IrrepCount>& m) {
    return {m[0], m[1], m[2], m[3], m[4], m[5], m[6]};
  }
  friend bool operator==(const IsotypicMultiplicities&, const IsotypicMultiplicities&) = default;
};

// Σ multᵢ·χᵢ.
CharacterVector character_of(const IsotypicMultiplicities& m);

// Exact inner products ⟨χ_V, χᵢ⟩ = (1/16)·Σ_classes size·χ_V·χᵢ.  Throws
// domain_error("not a character ...") when any inner product fails to be a
// non-negative integer.
IsotypicMultiplicities isotypic_multiplicities(const CharacterVector& chi);

// dim Fix(K, V) = (1/|K|)·Σ_{k∈K} χ_V(k), complex dimension.  K must be a
// subgroup of the catalog order-16 dihedral group (named rho of order 8 and
// kappa outside ⟨rho⟩; domain_error otherwise).  internal_error if the
// average is not an integer — impossible for genuine characters.
int fix_dimension(const Subgroup& K, const CharacterVector& chi);

// The side conditions for the order-16 dihedral connection in terms of the
// isotypic decomposition of the phase space V:
//   isotropy_H:       a₂ ≥ 1 — the endpoint subgroup is an isotropy subgroup,
//   isotropy_K:       e₁ + e₂ ≥ 1 — the connection subgroup is one,
//   open_set_exists:  both, plus f ≥ 1 — an open set of equivariant vector
//                     fields carries the robust connection cycle.
struct D8CriterionVerdict {
  bool isotropy_K = false;
  bool isotropy_H = false;
  bool open_set_exists = false;
  friend bool operator==(const D8CriterionVerdict&, const D8CriterionVerdict&) = default;
};
D8CriterionVerdict d8_rht_criterion(const IsotypicMultiplicities& m);

// Real dimension of two copies of the regular representation — an ambient
// space in which any finite group realizes all of its connection cycles.
int regular_rep_dimension(const Group& G);

} // namespace eqtriples
