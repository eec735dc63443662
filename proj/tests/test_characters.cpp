#include "eqtriples/characters.hpp"

#include <random>

#include "doctest.h"
#include "eqtriples/catalog.hpp"
#include "eqtriples/error.hpp"

using namespace eqtriples;

namespace {

Subgroup sub(const Group& G, const std::vector<std::string>& exprs) {
  std::vector<Permutation> gens;
  for (const std::string& e : exprs) gens.push_back(named_element(G, e));
  return generate_subgroup(G, gens);
}

} // namespace

TEST_CASE("exact quadratic-integer arithmetic") {
  const Root2 x{1, 1}, y{1, -1};
  CHECK(x * y == Root2{-1, 0});
  CHECK(x + y == Root2{2, 0});
  CHECK((Root2{0, 1} * Root2{0, 1}) == Root2{2, 0});
  CHECK(Root2{3}.is_integer());
  CHECK_FALSE(x.is_integer());
  CHECK(Root2{3}.to_string() == "3");
  CHECK(Root2{0, 1}.to_string() == "sqrt(2)");
  CHECK(Root2{-2, -1}.to_string() == "-2-sqrt(2)");
  CHECK(Root2{1, 3}.to_string() == "1+3*sqrt(2)");
  CHECK(Root2{0, 1}.approx() == doctest::Approx(1.41421356).epsilon(1e-6));
}

TEST_CASE("character table shape and exact orthonormality") {
  const auto& table = d8_character_table();
  int size_sum = 0;
  for (int c = 0; c < kD8ClassCount; ++c) size_sum += kD8ClassSizes[c];
  CHECK(size_sum == 16);

  long long degree_sq = 0;
  for (const CharacterVector& chi : table) {
    REQUIRE(chi.at_identity().is_integer());
    degree_sq += chi.at_identity().a * chi.at_identity().a;
  }
  CHECK(degree_sq == 16);  // sum of squared irrep dimensions equals the order

  for (int i = 0; i < kD8IrrepCount; ++i) {
    for (int j = 0; j < kD8IrrepCount; ++j) {
      Root2 sum;
      for (int c = 0; c < kD8ClassCount; ++c)
        sum = sum + Root2{kD8ClassSizes[c]} * table[i].values[c] * table[j].values[c];
      CHECK(sum == Root2{i == j ? 16 : 0, 0});
    }
  }
}

TEST_CASE("isotypic decomposition of known characters") {
  const auto& table = d8_character_table();
  CHECK(isotypic_multiplicities(table[6]) == IsotypicMultiplicities{0, 0, 0, 0, 0, 0, 1});

  CharacterVector mix = character_of({1, 0, 1, 0, 0, 0, 1});  // A0 + A2 + F
  CHECK(isotypic_multiplicities(mix) == IsotypicMultiplicities{1, 0, 1, 0, 0, 0, 1});

  CharacterVector regular;
  regular.values[0] = Root2{16};
  CHECK(isotypic_multiplicities(regular) == IsotypicMultiplicities{1, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("class functions that are not characters are rejected") {
  CharacterVector fractional;
  fractional.values[0] = Root2{1};  // ⟨χ, A0⟩ = 1/16
  CHECK_THROWS_WITH_AS((void)isotypic_multiplicities(fractional),
                       doctest::Contains("not a character"), domain_error);

  // A0 - A1 has a negative multiplicity
  CharacterVector diff;
  for (int c = 0; c < kD8ClassCount; ++c) {
    const auto& t = d8_character_table();
    diff.values[c] = t[0].values[c] - t[1].values[c];
  }
  CHECK_THROWS_WITH_AS((void)isotypic_multiplicities(diff), doctest::Contains("not a character"),
                       domain_error);

  CharacterVector irrational;
  irrational.values[0] = Root2{0, 1};
  CHECK_THROWS_AS((void)isotypic_multiplicities(irrational), domain_error);
}

TEST_CASE("fixed-space dimensions on the order-16 dihedral group") {
  const Group G = build_group("D8");
  const auto& table = d8_character_table();

  const Subgroup trivial = trivial_subgroup(G);
  for (const CharacterVector& chi : table)
    CHECK(fix_dimension(trivial, chi) == static_cast<int>(chi.at_identity().a));

  CHECK(fix_dimension(sub(G, {"kappa"}), table[6]) == 1);                  // F fixes a line
  CHECK(fix_dimension(sub(G, {"kappa", "rho^2"}), table[4]) == 0);         // E1 has no H-fixed part
  CHECK(fix_dimension(sub(G, {"kappa", "rho^2"}), table[5]) == 0);
  CHECK(fix_dimension(sub(G, {"kappa", "rho^2"}), table[2]) == 1);         // A2 survives

  // wrong ambient group is rejected
  const Group d4 = build_group("D4");
  CHECK_THROWS_AS((void)fix_dimension(trivial_subgroup(d4), table[0]), domain_error);
}

TEST_CASE("fixed-space decomposition identities on random multiplicities") {
  const Group G = build_group("D8");
  const Subgroup H = sub(G, {"kappa", "rho^2"});
  const Subgroup K = sub(G, {"kappa"});
  const Subgroup K_twisted = conjugate_subgroup(K, G.index_of(named_element(G, "rho^-1")));
  REQUIRE(K_twisted.members() != K.members());

  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const IsotypicMultiplicities m{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    const CharacterVector chi = character_of(m);
    CAPTURE(trial);
    CHECK(isotypic_multiplicities(chi) == m);  // decomposition inverts synthesis
    CHECK(fix_dimension(H, chi) == m.a0 + m.a2);
    CHECK(fix_dimension(K, chi) == m.a0 + m.a2 + m.e1 + m.e2 + m.f);
    CHECK(fix_dimension(K_twisted, chi) == m.a0 + m.a2 + m.e1 + m.e2 + m.f);
    // monotone non-increasing along a subgroup chain
    const int d_triv = fix_dimension(trivial_subgroup(G), chi);
    const int d_k = fix_dimension(K, chi);
    const int d_h = fix_dimension(H, chi);
    const int d_g = fix_dimension(whole_group(G), chi);
    CHECK(d_triv >= d_k);
    CHECK(d_k >= d_h);
    CHECK(d_h >= d_g);
  }
}

TEST_CASE("the dihedral side-condition verdict") {
  CHECK(d8_rht_criterion({1, 0, 1, 0, 1, 1, 0}) ==
        D8CriterionVerdict{true, true, false});  // no F copy: eigenvalues collide
  CHECK(d8_rht_criterion({1, 0, 1, 0, 1, 0, 1}) == D8CriterionVerdict{true, true, true});
  CHECK(d8_rht_criterion({0, 0, 0, 0, 0, 0, 1}) == D8CriterionVerdict{false, false, false});
  CHECK(d8_rht_criterion({0, 0, 1, 0, 0, 1, 1}) == D8CriterionVerdict{true, true, true});

  // monotone: adding irreps never flips a true verdict to false
  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> d(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const IsotypicMultiplicities m{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    IsotypicMultiplicities bigger = m;
    bigger.a2 += d(rng);
    bigger.e1 += d(rng);
    bigger.f += d(rng);
    const D8CriterionVerdict before = d8_rht_criterion(m);
    const D8CriterionVerdict after = d8_rht_criterion(bigger);
    CHECK((!before.isotropy_K || after.isotropy_K));
    CHECK((!before.isotropy_H || after.isotropy_H));
    CHECK((!before.open_set_exists || after.open_set_exists));
  }
}

TEST_CASE("regular representation dimensions") {
  CHECK(regular_rep_dimension(build_group("D4")) == 16);
  CHECK(regular_rep_dimension(build_group("Z2 wr Z3")) == 48);
  CHECK(regular_rep_dimension(build_group("Z2 wr S3")) == 96);
}
