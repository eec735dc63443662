#include "eqtriples/characters.hpp"

#include <cmath>

#include "eqtriples/catalog.hpp"
#include "eqtriples/error.hpp"

namespace eqtriples {

double Root2::approx() const { return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(2.0); }

std::string Root2::to_string() const {
  if (b == 0) return std::to_string(a);
  std::string s;
  if (a != 0) s = std::to_string(a);
  if (b == 1)
    s += s.empty() ? "sqrt(2)" : "+sqrt(2)";
  else if (b == -1)
    s += "-sqrt(2)";
  else if (b > 0)
    s += (s.empty() ? "" : "+") + std::to_string(b) + "*sqrt(2)";
  else
    s += std::to_string(b) + "*sqrt(2)";
  return s;
}

const std::array<const char*, kD8ClassCount> kD8ClassNames = {
    "e", "kappa", "kappa*rho", "rho", "rho^2", "rho^3", "rho^4"};
const std::array<int, kD8ClassCount> kD8ClassSizes = {1, 4, 4, 2, 2, 2, 1};

const std::array<const char*, kD8IrrepCount> kD8IrrepNames = {"A0", "A1", "A2", "A3",
                                                              "E1", "E2", "F"};

const std::array<CharacterVector, kD8IrrepCount>& d8_character_table() {
  static const std::array<CharacterVector, kD8IrrepCount> table = [] {
    const Root2 r2{0, 1}, mr2{0, -1};
    std::array<CharacterVector, kD8IrrepCount> t{};
    //                e    κ    κρ    ρ    ρ²   ρ³    ρ⁴
    t[0].values = {1, 1, 1, 1, 1, 1, 1};        // A0
    t[1].values = {1, -1, -1, 1, 1, 1, 1};      // A1
    t[2].values = {1, 1, -1, -1, 1, -1, 1};     // A2
    t[3].values = {1, -1, 1, -1, 1, -1, 1};     // A3
    t[4].values = {2, 0, 0, r2, 0, mr2, -2};    // E1
    t[5].values = {2, 0, 0, mr2, 0, r2, -2};    // E2
    t[6].values = {2, 0, 0, 0, -2, 0, 2};       // F
    return t;
  }();
  return table;
}

CharacterVector character_of(const IsotypicMultiplicities& m) {
  const auto& table = d8_character_table();
  const std::array<int, kD8IrrepCount> mult = m.as_array();
  CharacterVector out;
  for (int i = 0; i < kD8IrrepCount; ++i)
    for (int c = 0; c < kD8ClassCount; ++c)
      out.values[c] = out.values[c] + Root2{mult[i]} * table[i].values[c];
  return out;
}

IsotypicMultiplicities isotypic_multiplicities(const CharacterVector& chi) {
  const auto& table = d8_character_table();
  std::array<int, kD8IrrepCount> mult{};
  for (int i = 0; i < kD8IrrepCount; ++i) {
    Root2 sum;
    for (int c = 0; c < kD8ClassCount; ++c)
      sum = sum + Root2{kD8ClassSizes[c]} * chi.values[c] * table[i].values[c];
    if (!sum.is_integer() || sum.a % 16 != 0)
      throw domain_error("not a character: inner product with " + std::string(kD8IrrepNames[i]) +
                         " is " + sum.to_string() + "/16");
    const long long q = sum.a / 16;
    if (q < 0)
      throw domain_error("not a character: negative multiplicity of " +
                         std::string(kD8IrrepNames[i]));
    mult[i] = static_cast<int>(q);
  }
  return IsotypicMultiplicities::from_array(mult);
}

namespace {

// the conjugacy class of every element of the catalog order-16 dihedral
// group, as an index into the fixed class order
std::vector<int> d8_class_of(const Group& G) {
  if (G.order() != 16)
    throw domain_error("fix_dimension needs the order-16 dihedral group, got order " +
                       std::to_string(G.order()));
  const auto rho = G.named("rho");
  const auto kappa = G.named("kappa");
  if (!rho || !kappa || order_of(*rho) != 8 || order_of(*kappa) != 2)
    throw domain_error("fix_dimension needs the catalog order-16 dihedral group (named rho, kappa)");

  std::vector<int> cls(16, -1);
  int covered = 0;
  for (int c = 0; c < kD8ClassCount; ++c) {
    const ElementIndex rep = G.index_of(named_element(G, kD8ClassNames[c]));
    for (ElementIndex f = 0; f < G.order(); ++f) {
      const ElementIndex x = G.conj(f, rep);
      if (cls[x] == -1) {
        cls[x] = c;
        ++covered;
      } else if (cls[x] != c) {
        throw internal_error("conjugacy classes of the dihedral group are inconsistent");
      }
    }
  }
  if (covered != 16) throw internal_error("conjugacy classes do not cover the dihedral group");
  return cls;
}

} // namespace

int fix_dimension(const Subgroup& K, const CharacterVector& chi) {
  const Group& G = K.parent();
  const std::vector<int> cls = d8_class_of(G);
  Root2 sum;
  for (ElementIndex k : K.members()) sum = sum + chi.values[static_cast<std::size_t>(cls[k])];
  if (!sum.is_integer() || sum.a % K.order() != 0 || sum.a < 0)
    throw internal_error("fixed-space dimension is not a non-negative integer: " +
                         sum.to_string() + "/" + std::to_string(K.order()));
  return static_cast<int>(sum.a / K.order());
}

D8CriterionVerdict d8_rht_criterion(const IsotypicMultiplicities& m) {
  D8CriterionVerdict v;
  v.isotropy_H = m.a2 >= 1;
  v.isotropy_K = m.e1 + m.e2 >= 1;
  v.open_set_exists = v.isotropy_H && v.isotropy_K && m.f >= 1;
  return v;
}

int regular_rep_dimension(const Group& G) { return 2 * G.order(); }

} // namespace eqtriples
