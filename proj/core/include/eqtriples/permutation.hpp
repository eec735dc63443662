#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eqtriples {

// Largest supported number of moved points.
inline constexpr int kMaxDegree = 24;

// A permutation of {1,...,n}, stored as a 0-based image list:
// images()[i] is the (0-based) image of point i.  All public text I/O
// (cycle strings) is 1-based; all numeric APIs are 0-based.
//
// Permutations compare lexicographically by image list.  This is the
// canonical element order used everywhere: the identity is always least.
class Permutation {
public:
  // images must be a bijection on {0,...,n-1}, n <= kMaxDegree.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  bool is_identity() const;

  // 0-based application.
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }

  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation inverse() const;

  // Disjoint-cycle rendering, 1-based, fixed points omitted; "e" for the
  // identity.  Each cycle starts at its smallest point; cycles are ordered
  // by smallest point.  Example: "(1 2 3)(4 5)".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<std::uint8_t> images_;
};

// compose(a, b) applies b first: x |-> a(b(x)).  Degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);

// Parse 1-based disjoint-cycle notation at a fixed degree.
// Accepts "e", "()" and "" for the identity, and forms like "(1 2 3)(4 5)"
// (commas also allowed as separators inside a cycle).  Every point must be
// in 1..degree and may appear at most once.  Throws parse_error.
Permutation parse_permutation(std::string_view text, int degree);

// a^k for any integer k (k < 0 uses the inverse, k = 0 gives the identity).
Permutation power(const Permutation& a, long long k);

int order_of(const Permutation& a);

} // namespace eqtriples
