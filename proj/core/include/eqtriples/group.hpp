#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqtriples/permutation.hpp"

namespace eqtriples {

// Largest group order for which a Group (Cayley table) may be built.
inline constexpr int kMaxBuildOrder = 2000;
// Largest group order for which exhaustive subgroup-lattice work
// (all_subgroups, unrestricted triple enumeration) is allowed.
inline constexpr int kFullEnumerationCap = 1000;
// Above this order, triple enumeration requires caller-supplied K candidates.
inline constexpr int kRestrictedModeThreshold = 200;

using ElementIndex = std::uint16_t;

// A finite permutation group, materialized: all elements in canonical
// (lexicographic-image) order plus a Cayley table.  Index 0 is always the
// identity.  Subgroup objects hold a pointer to their parent Group, so a
// Group must stay alive and at a fixed address while they are in use.
class Group {
public:
  static Group from_generators(int degree, std::vector<Permutation> generators,
                               std::string label = "");

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::string& label() const { return label_; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  ElementIndex identity() const { return 0; }

  // Index of a permutation in canonical order; domain_error if not a member.
  ElementIndex index_of(const Permutation& p) const;
  std::optional<ElementIndex> try_index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return try_index_of(p).has_value(); }

  ElementIndex mul(ElementIndex a, ElementIndex b) const {  // element(a) ∘ element(b)
    return mul_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  ElementIndex inv(ElementIndex a) const { return inv_[a]; }
  ElementIndex conj(ElementIndex g, ElementIndex x) const {  // g x g⁻¹
    return mul(mul(g, x), inv(g));
  }

  // Named elements (rho, kappa, kappa_j, sigma, i, j, k, ...), filled in by
  // the catalog builders.
  void register_name(std::string name, const Permutation& value);
  std::optional<Permutation> named(std::string_view name) const;
  const std::map<std::string, ElementIndex, std::less<>>& names() const { return names_; }

private:
  Group() = default;

  int degree_ = 0;
  std::string label_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::vector<ElementIndex> mul_;
  std::vector<ElementIndex> inv_;
  std::map<std::string, ElementIndex, std::less<>> names_;
};

// A subgroup of a materialized Group: sorted member indices plus a bitmask
// for O(1) membership.  Equality compares parent identity and member sets.
class Subgroup {
public:
  Subgroup(const Group& parent, std::vector<ElementIndex> sorted_members,
           std::vector<ElementIndex> generator_indices);

  const Group& parent() const { return *parent_; }
  int order() const { return static_cast<int>(members_.size()); }
  const std::vector<ElementIndex>& members() const { return members_; }
  const std::vector<ElementIndex>& generator_indices() const { return gens_; }
  std::vector<Permutation> generator_perms() const;

  bool contains(ElementIndex i) const {
    return (mask_[i >> 6] >> (i & 63)) & 1ULL;
  }
  bool is_whole_group() const { return order() == parent_->order(); }
  bool is_trivial() const { return order() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  const Group* parent_;
  std::vector<ElementIndex> members_;
  std::vector<std::uint64_t> mask_;
  std::vector<ElementIndex> gens_;
};

// --- subgroup construction -------------------------------------------------

// Closure of generator indices inside G.  An empty list gives the trivial
// subgroup.
Subgroup generate_subgroup(const Group& G, const std::vector<ElementIndex>& generator_indices);
// Same, from permutations; each must be a member of G (domain_error).
Subgroup generate_subgroup(const Group& G, const std::vector<Permutation>& generators);

Subgroup trivial_subgroup(const Group& G);
Subgroup whole_group(const Group& G);

// --- subgroup operations ----------------------------------------------------

// {g k g⁻¹ : k ∈ K}
Subgroup conjugate_subgroup(const Subgroup& K, ElementIndex g);
Subgroup conjugate_subgroup(const Subgroup& K, const Permutation& g);

// N_G(K) = {g ∈ G : gKg⁻¹ = K}
Subgroup normalizer(const Group& G, const Subgroup& K);

// Sorted {g ∘ h : h ∈ H}.
std::vector<ElementIndex> left_coset(const Group& G, ElementIndex g, const Subgroup& H);
// Sorted {h ∘ g : h ∈ H}.
std::vector<ElementIndex> right_coset(const Group& G, const Subgroup& H, ElementIndex g);

bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer);
// Is `sub` normal in `in`?  Requires sub ≤ in (domain_error otherwise).
bool is_normal(const Subgroup& sub, const Subgroup& in);
// Is K normal in the whole parent group?
bool is_normal_in_parent(const Subgroup& K);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);  // ⟨a ∪ b⟩

// --- lattice ----------------------------------------------------------------

// Every subgroup of G, sorted by (order, members).  Deterministic.
// resource_error if |G| > kFullEnumerationCap.
std::vector<Subgroup> all_subgroups(const Group& G);

// Every subgroup H with H0 ≤ H ≤ G, sorted by (order, members).  Works by
// joining H0 with cyclic subgroups to a fixpoint, so it does not need the
// full lattice.
std::vector<Subgroup> overgroups(const Group& G, const Subgroup& H0);

// The subgroup as a standalone Group on the same points (used when a
// subgroup must serve as the ambient group of further computations).
Group materialize(const Subgroup& H, std::string label = "");

} // namespace eqtriples
