#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqtriples/group.hpp"
#include "eqtriples/permutation.hpp"

namespace eqtriples {

// Structured form of a group spec.  Grammar (whitespace-separated tokens):
//
//   spec    := product
//   product := wreath ( "x" wreath )*
//   wreath  := atom ( "wr" atom )*          (left-associative)
//   atom    := C<n> | Z<n> | D<n> | S<n> | Q8
//
// "Z" is a synonym for "C" (cyclic).  Heads are case-insensitive.
struct GroupSpec {
  enum class Kind { cyclic, dihedral, symmetric, quaternion, wreath, product };

  Kind kind = Kind::cyclic;
  int parameter = 0;               // n for C/D/S; unused otherwise
  std::vector<GroupSpec> children; // wreath: {base, top}; product: 2+ factors

  // Canonical rendering ("C2 wr S3", "C2 x C4"); parse(to_string()) is the
  // same spec.
  std::string to_string() const;

  // Number of points the built group acts on.
  int degree() const;
  // Exact group order (may exceed the build cap; callers check).
  unsigned long long order() const;

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec parse_group_spec(std::string_view text);

// Materialize the spec as a permutation group.  Throws resource_error if the
// degree exceeds kMaxDegree or the order exceeds kMaxBuildOrder.
//
// Conventions:
//  * C n: rho = (1 2 ... n).  Named: rho.
//  * D n (n >= 3): rho = (1 2 ... n), kappa : j -> 2-j (mod n), the
//    reflection fixing point 1.  Named: rho, kappa.
//  * S n: generated by (1 2) and (1 2 ... n).
//  * Q8: the regular action on {1,-1,i,-i,j,-j,k,-k} (points 1..8).
//    Named: i, j, k.
//  * L wr T with |T acting on n points|, |L on m points|: acts on m*n
//    points; copy j of L lives on {m(j-1)+1, ..., m j}; T permutes the
//    copies rigidly (point m(j-1)+p -> m(t(j)-1)+p).  Named: kappa_j (base
//    first generator in copy j), kappa (= kappa_1), rho (embedded top
//    n-cycle for cyclic/symmetric/dihedral tops), sigma (embedded top
//    transposition (1 2) for symmetric tops).
//  * A x B: acts on deg(A)+deg(B) points, factors side by side.
Group build_group(const GroupSpec& spec);

// Convenience: parse + build.
Group build_group(std::string_view spec_text);

// The wreath layout (see build_group) as standalone maps, for callers that
// need to place their own elements in an L wr T group: a base permutation
// acting on one copy (copy_index is 0-based), and a top permutation rigidly
// permuting copies of the given size.
Permutation wreath_embed_base(const Permutation& b, int copy_index, int copies);
Permutation wreath_embed_top(const Permutation& t, int base_degree);

// Evaluate an element expression against a group's named-element registry.
//
//   expr  := term ( ("*" | whitespace) term )*
//   term  := (name | cycles) [ "^" integer ]
//
// Terms are composed left-to-right with compose(), i.e. "kappa*rho" is
// kappa∘rho (rho applied first).  `cycles` is standard 1-based cycle
// notation; "e" and "()" are the identity.  Throws parse_error for unknown
// names or malformed syntax.  The result is not required to be a member of
// G (catalog registries only produce members, but explicit cycles can name
// any permutation of the right degree).
Permutation named_element(const Group& G, std::string_view expression);

} // namespace eqtriples
