#include "doctest.h"

#include "eqtriples/error.hpp"
#include "eqtriples/permutation.hpp"

using namespace eqtriples;

TEST_CASE("parse and print round-trip") {
  auto p = parse_permutation("(1 2 3)(4 5)", 6);
  CHECK(p.cycle_string() == "(1 2 3)(4 5)");
  CHECK(p(0) == 1);  // 1 -> 2
  CHECK(p(2) == 0);  // 3 -> 1
  CHECK(p(3) == 4);
  CHECK(p(4) == 3);
  CHECK(p(5) == 5);

  CHECK(parse_permutation("e", 4).is_identity());
  CHECK(parse_permutation("()", 4).is_identity());
  CHECK(parse_permutation("  ", 4).is_identity());
  CHECK(Permutation::identity(5).cycle_string() == "e");

  // commas allowed, cycle starts normalized to smallest point
  CHECK(parse_permutation("(2,3,1)", 3).cycle_string() == "(1 2 3)");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_permutation("(1 2", 4), parse_error);
  CHECK_THROWS_AS(parse_permutation("(0 1)", 4), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 5)", 4), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), parse_error);  // not disjoint
  CHECK_THROWS_AS(parse_permutation("1 2 3", 4), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 x)", 4), parse_error);
}

TEST_CASE("compose applies the right factor first") {
  // a = (1 2), b = (2 3); a∘b: 2 -> b -> 3 -> a -> 3, so 2 -> 3
  auto a = parse_permutation("(1 2)", 3);
  auto b = parse_permutation("(2 3)", 3);
  auto ab = compose(a, b);
  CHECK(ab.cycle_string() == "(1 2 3)");  // 1->2, 2->3, 3->1
  auto ba = compose(b, a);
  CHECK(ba.cycle_string() == "(1 3 2)");
  CHECK_THROWS_AS(compose(a, parse_permutation("(1 2)", 4)), domain_error);
}

TEST_CASE("inverse and power") {
  auto c = parse_permutation("(1 2 3 4 5)", 5);
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK(power(c, 5).is_identity());
  CHECK(power(c, -1) == c.inverse());
  CHECK(power(c, 7) == compose(c, c));
  CHECK(power(c, 0).is_identity());
  CHECK(order_of(c) == 5);
  CHECK(order_of(parse_permutation("(1 2)(3 4 5)", 5)) == 6);
  CHECK(order_of(Permutation::identity(3)) == 1);
}

TEST_CASE("canonical ordering: identity is least") {
  auto id = Permutation::identity(4);
  auto t = parse_permutation("(3 4)", 4);
  auto u = parse_permutation("(1 2)", 4);
  CHECK(id < t);
  CHECK(id < u);
  CHECK((t < u || u < t));  // strict total order
  // lexicographic by images: (3 4) = [0,1,3,2] < (1 2) = [1,0,2,3]
  CHECK(t < u);
}

TEST_CASE("degree cap enforced") {
  CHECK_THROWS_AS(Permutation::identity(kMaxDegree + 1), domain_error);
  CHECK(Permutation::identity(kMaxDegree).degree() == kMaxDegree);
}

TEST_CASE("bijection validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), domain_error);
  CHECK_THROWS_AS(Permutation({0, 3}), domain_error);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{}), domain_error);
}
