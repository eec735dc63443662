#include "doctest.h"

#include <algorithm>

#include "eqtriples/error.hpp"
#include "eqtriples/group.hpp"

using namespace eqtriples;

namespace {

Group make_s4() {
  return Group::from_generators(
      4, {parse_permutation("(1 2)", 4), parse_permutation("(1 2 3 4)", 4)}, "S4");
}

Group make_d4() {
  // rho = (1 2 3 4), kappa = reflection fixing 1: j -> 2-j mod 4 => (2 4)
  return Group::from_generators(
      4, {parse_permutation("(1 2 3 4)", 4), parse_permutation("(2 4)", 4)}, "D4");
}

} // namespace

TEST_CASE("group closure and Cayley table") {
  Group S4 = make_s4();
  CHECK(S4.order() == 24);
  CHECK(S4.degree() == 4);
  CHECK(S4.identity() == 0);
  CHECK(S4.element(0).is_identity());

  // table agrees with permutation composition for every pair
  for (ElementIndex a = 0; a < S4.order(); ++a)
    for (ElementIndex b = 0; b < S4.order(); ++b) {
      const auto p = compose(S4.element(a), S4.element(b));
      REQUIRE(S4.element(S4.mul(a, b)) == p);
    }
  for (ElementIndex a = 0; a < S4.order(); ++a)
    CHECK(S4.mul(a, S4.inv(a)) == S4.identity());
}

TEST_CASE("index_of and membership") {
  Group D4 = make_d4();
  CHECK(D4.order() == 8);
  for (ElementIndex i = 0; i < D4.order(); ++i)
    CHECK(D4.index_of(D4.element(i)) == i);
  CHECK(!D4.contains(parse_permutation("(1 2)", 4)));  // odd transposition not in D4 (this embedding)
  CHECK_THROWS_AS(D4.index_of(parse_permutation("(1 2)", 4)), domain_error);
}

TEST_CASE("order cap enforced") {
  // S7 would have order 5040 > 2000, but degree cap trips first; use a big
  // direct-product style generator set on <= 24 points instead: C11 x C13 x C7
  // has order 1001 <= 2000 fits; order 3*5*7*11 = 1155 also fine.  To exceed:
  // C3 x C5 x C7 x C11 on 3+5+7+11 = 26 points exceeds degree cap, so build
  // S7 on 7 points to trip the order cap.
  std::vector<Permutation> gens{parse_permutation("(1 2)", 7),
                                parse_permutation("(1 2 3 4 5 6 7)", 7)};
  CHECK_THROWS_AS(Group::from_generators(7, std::move(gens), "S7"), resource_error);
}

TEST_CASE("named elements") {
  Group D4 = make_d4();
  D4.register_name("rho", parse_permutation("(1 2 3 4)", 4));
  D4.register_name("kappa", parse_permutation("(2 4)", 4));
  CHECK(D4.named("rho").has_value());
  CHECK(D4.named("rho")->cycle_string() == "(1 2 3 4)");
  CHECK(!D4.named("zeta").has_value());
}

TEST_CASE("generate_subgroup closure") {
  Group S4 = make_s4();
  auto V = generate_subgroup(
      S4, std::vector<Permutation>{parse_permutation("(1 2)(3 4)", 4),
                                   parse_permutation("(1 3)(2 4)", 4)});
  CHECK(V.order() == 4);
  CHECK(V.contains(S4.index_of(parse_permutation("(1 4)(2 3)", 4))));
  CHECK(trivial_subgroup(S4).order() == 1);
  CHECK(whole_group(S4).order() == 24);
  CHECK_THROWS_AS(generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)", 5)}),
                  domain_error);
}

TEST_CASE("conjugate_subgroup") {
  Group S4 = make_s4();
  auto K = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)", 4)});
  auto Kc = conjugate_subgroup(K, S4.index_of(parse_permutation("(1 3)(2 4)", 4)));
  // g (1 2) g⁻¹ = (g1 g2) = (3 4)
  CHECK(Kc.contains(S4.index_of(parse_permutation("(3 4)", 4))));
  CHECK(Kc.order() == 2);
}

TEST_CASE("normalizer: brute-force cross-check") {
  Group S4 = make_s4();
  auto subs = all_subgroups(S4);
  for (const auto& K : subs) {
    auto N = normalizer(S4, K);
    // brute force definition
    std::vector<ElementIndex> brute;
    for (ElementIndex g = 0; g < S4.order(); ++g) {
      auto Kg = conjugate_subgroup(K, g);
      if (Kg == K) brute.push_back(g);
    }
    REQUIRE(N.members() == brute);
    // K is always normal in its normalizer
    CHECK(is_normal(K, N));
  }
}

TEST_CASE("dihedral normalizer formula") {
  // In D_{2m} (order 4m, even rotation count), N(<kappa>) = <kappa, rho^m>.
  for (int n : {4, 6, 8, 10, 12}) {  // group D_n with n even, rotation order n
    Group D = Group::from_generators(
        n,
        {parse_permutation("(" + [n] {
           std::string s;
           for (int i = 1; i <= n; ++i) s += std::to_string(i) + (i < n ? " " : "");
           return s;
         }() + ")", n),
         [n] {
           std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
           for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] =
               static_cast<std::uint8_t>(((2 - (j + 1)) % n + n) % n);
           return Permutation(img);
         }()},
        "D" + std::to_string(n));
    REQUIRE(D.order() == 2 * n);
    auto kappa = D.elements()[0];  // placeholder; find reflection fixing point 1 (0-based 0)
    bool found = false;
    for (const auto& e : D.elements()) {
      if (!e.is_identity() && e(0) == 0 && order_of(e) == 2) {
        // reflection through point 1
        kappa = e;
        found = true;
        break;
      }
    }
    REQUIRE(found);
    auto K = generate_subgroup(D, std::vector<Permutation>{kappa});
    auto N = normalizer(D, K);
    // formula: |N| = 4 for even n (kappa, rho^{n/2} commute with kappa... )
    CHECK(N.order() == 4);
    CHECK(N.contains(D.index_of(power(parse_permutation(
        "(" + [n] {
          std::string s;
          for (int i = 1; i <= n; ++i) s += std::to_string(i) + (i < n ? " " : "");
          return s;
        }() + ")", n), n / 2))));
  }
}

TEST_CASE("cosets") {
  Group S4 = make_s4();
  auto H = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)", 4),
                                                          parse_permutation("(3 4)", 4)});
  auto g = S4.index_of(parse_permutation("(1 3)", 4));
  auto L = left_coset(S4, g, H);
  auto R = right_coset(S4, H, g);
  CHECK(L.size() == 4);
  CHECK(R.size() == 4);
  CHECK(std::is_sorted(L.begin(), L.end()));
  // left coset holds g∘h
  for (ElementIndex h : H.members()) {
    auto gh = S4.mul(g, h);
    CHECK(std::binary_search(L.begin(), L.end(), gh));
  }
  CHECK(L != R);  // H is not normal, g picks them apart
}

TEST_CASE("is_normal") {
  Group S4 = make_s4();
  auto V = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)(3 4)", 4),
                                                          parse_permutation("(1 3)(2 4)", 4)});
  auto K2 = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)", 4)});
  CHECK(is_normal_in_parent(V));
  CHECK(!is_normal_in_parent(K2));
  CHECK(is_normal(V, whole_group(S4)));
  CHECK_THROWS_AS(is_normal(V, K2), domain_error);  // V not inside K2
}

TEST_CASE("intersect and join") {
  Group S4 = make_s4();
  auto A = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)", 4)});
  auto B = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(3 4)", 4)});
  auto I = intersect(A, B);
  CHECK(I.order() == 1);
  auto J = join(A, B);
  CHECK(J.order() == 4);
  CHECK(J.contains(S4.index_of(parse_permutation("(1 2)(3 4)", 4))));
}

TEST_CASE("all_subgroups counts match known lattices") {
  // D4 (order 8): 10 subgroups; Q8: 6; C6: 4 (divisors of 6); S4: 30.
  Group D4 = make_d4();
  CHECK(all_subgroups(D4).size() == 10);

  Group Q8 = Group::from_generators(
      8, {parse_permutation("(1 3 2 4)(5 7 6 8)", 8), parse_permutation("(1 5 2 6)(3 8 4 7)", 8)},
      "Q8");
  REQUIRE(Q8.order() == 8);
  CHECK(all_subgroups(Q8).size() == 6);

  Group C6 = Group::from_generators(6, {parse_permutation("(1 2 3 4 5 6)", 6)}, "C6");
  CHECK(all_subgroups(C6).size() == 4);

  Group S4 = make_s4();
  auto subs = all_subgroups(S4);
  CHECK(subs.size() == 30);
  // deterministic ordering: by (order, members)
  for (std::size_t i = 1; i < subs.size(); ++i) {
    const bool ordered = subs[i - 1].order() < subs[i].order() ||
                         (subs[i - 1].order() == subs[i].order() &&
                          subs[i - 1].members() < subs[i].members());
    CHECK(ordered);
  }
  // every returned set is closed
  for (const auto& H : subs) {
    for (ElementIndex a : H.members())
      for (ElementIndex b : H.members())
        REQUIRE(H.contains(S4.mul(a, b)));
  }
}

TEST_CASE("overgroups: complete and consistent with the full lattice") {
  Group S4 = make_s4();
  auto subs = all_subgroups(S4);
  auto H0 = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)", 4),
                                                           parse_permutation("(3 4)", 4)});
  auto over = overgroups(S4, H0);
  std::vector<std::vector<ElementIndex>> expect;
  for (const auto& H : subs)
    if (is_subgroup_of(H0, H)) expect.push_back(H.members());
  std::vector<std::vector<ElementIndex>> got;
  for (const auto& H : over) got.push_back(H.members());
  CHECK(got == expect);
  // H0 itself, D4 containing it, and S4: at least 3
  CHECK(over.size() >= 3);
}

TEST_CASE("materialize turns a subgroup into its own group") {
  Group S4 = make_s4();
  auto V = generate_subgroup(S4, std::vector<Permutation>{parse_permutation("(1 2)(3 4)", 4),
                                                          parse_permutation("(1 3)(2 4)", 4)});
  Group Vg = materialize(V, "V4");
  CHECK(Vg.order() == 4);
  CHECK(Vg.degree() == 4);
  CHECK(Vg.contains(parse_permutation("(1 4)(2 3)", 4)));
}

TEST_CASE("all_subgroups refuses oversized groups") {
  // build a group of order 1296 > 1000 within degree cap: S3 wr S3 on 9 points
  // generators: (1 2), (1 2 3) in block 1; top (1 2 3)-block map and (1 2)-block map
  std::vector<Permutation> gens{
      parse_permutation("(1 2)", 9), parse_permutation("(1 2 3)", 9),
      parse_permutation("(1 4 7)(2 5 8)(3 6 9)", 9), parse_permutation("(1 4)(2 5)(3 6)", 9)};
  Group W = Group::from_generators(9, std::move(gens), "S3 wr S3");
  REQUIRE(W.order() == 1296);
  CHECK_THROWS_AS(all_subgroups(W), resource_error);
}
