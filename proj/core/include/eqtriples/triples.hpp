#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqtriples/catalog.hpp"
#include "eqtriples/group.hpp"

namespace eqtriples {

// A candidate triple (K, g, H) inside one ambient group: K the connection
// isotropy, g the twist, H the endpoint isotropy.  The validity conditions
// used throughout are
//
//   condition 1:  {h ∘ g : h ∈ H} ∩ N_G(K) = ∅
//   condition 2:  K ⊆ H  and  gKg⁻¹ ⊆ H
//
// and the "local" strengthening recorded in the `htl` flag is
//
//   H ⊆ N_G(K)  and  H ⊆ N_G(gKg⁻¹),
//
// i.e. both K and its twist-conjugate are normal in H (given condition 2).
struct TripleFlags {
  bool ht1 = false;
  bool ht2 = false;
  bool htl = false;
};

struct HomoclinicTriple {
  Subgroup K;
  ElementIndex g;
  Subgroup H;
  TripleFlags flags;
  bool minimal = false;            // H equals the minimal closure ⟨K ∪ gKg⁻¹⟩
  std::optional<int> class_id;     // stamped by classify()

  bool valid() const { return flags.ht1 && flags.ht2; }
  const Group& group() const { return K.parent(); }
};

bool check_condition1(const Group& G, const Subgroup& K, ElementIndex g, const Subgroup& H);
bool check_condition2(const Group& G, const Subgroup& K, ElementIndex g, const Subgroup& H);
bool check_local(const Group& G, const Subgroup& K, ElementIndex g, const Subgroup& H);

// ⟨K ∪ gKg⁻¹⟩, the smallest H that can satisfy condition 2.
Subgroup minimal_closure(const Group& G, const Subgroup& K, ElementIndex g);

// Assemble a triple and compute all flags.  K and H must live in G; g must
// index an element of G.
HomoclinicTriple make_triple(const Group& G, const Subgroup& K, ElementIndex g,
                             const Subgroup& H);
HomoclinicTriple make_triple(const Group& G, const std::vector<Permutation>& k_gens,
                             const Permutation& g, const std::vector<Permutation>& h_gens);

// --- enumeration --------------------------------------------------------------

struct EnumerationOptions {
  // Emit only triples with H = ⟨K ∪ gKg⁻¹⟩.
  bool minimal_only = false;
  // Restrict K to these subgroups.  When empty, every non-normal subgroup of
  // G is tried, which requires |G| <= kRestrictedModeThreshold; larger groups
  // must supply candidates (resource_error otherwise).
  std::vector<Subgroup> k_candidates;
};

// All valid triples of G, deterministic order: K ascending by (order,
// members), then twist coset representatives in canonical element order
// (one per coset of N_G(K), since shifting g within g·N_G(K) never changes
// validity), then H ascending.  Every returned triple satisfies both
// conditions.
std::vector<HomoclinicTriple> enumerate_triples(const Group& G,
                                                const EnumerationOptions& opts = {});

bool has_triples(const Group& G);

// --- equivalence moves ---------------------------------------------------------

// (K, g∘ν, H) for ν ∈ N_G(K); domain_error otherwise.
HomoclinicTriple shift_twist(const HomoclinicTriple& t, ElementIndex nu);
// (K, g⁻¹, g⁻¹Hg)
HomoclinicTriple reverse_triple(const HomoclinicTriple& t);
// (fKf⁻¹, f∘g∘f⁻¹, fHf⁻¹)
HomoclinicTriple conjugate_triple(const HomoclinicTriple& t, ElementIndex f);

// --- classification ------------------------------------------------------------

struct EquivalenceClass {
  int id = 0;
  std::size_t representative = 0;    // index into the classified triple list
  std::vector<std::size_t> members;  // ascending indices
};

struct Classification {
  std::vector<HomoclinicTriple> triples;  // the input, with class_id stamped
  std::vector<EquivalenceClass> classes;  // ordered by canonical representative
};

// Group the triples under conjugation (all f ∈ G), twist shifts and
// reversal.  With require_closed (the default, correct for the output of
// enumerate_triples with the same options) a move image that normalizes to
// something outside the input set raises internal_error; without it such
// edges are ignored, which is what a restricted K-candidate enumeration
// needs.
Classification classify(const Group& G, std::vector<HomoclinicTriple> triples,
                        bool require_closed = true);

// The ν-shift-normal form used to identify triples inside classify: g is
// replaced by the canonically least element of g·N_G(K).
HomoclinicTriple normalize_twist(const HomoclinicTriple& t);

// |H ∩ g⁻¹Hg| / |K|: the number of connections the triple forces through
// each endpoint copy.  domain_error if |K| does not divide (only possible
// for invalid triples).
int connection_multiplicity(const HomoclinicTriple& t);

// --- transport between groups ---------------------------------------------------

class Homomorphism {
public:
  // Defined by images of generating permutations of the source; throws
  // domain_error if the pairs do not extend to a homomorphism or the given
  // elements do not generate the source.
  static Homomorphism from_generator_images(const Group& source, const Group& target,
                                            const std::vector<Permutation>& source_gens,
                                            const std::vector<Permutation>& images);

  const Group& source() const { return *source_; }
  const Group& target() const { return *target_; }
  ElementIndex apply(ElementIndex a) const { return image_[a]; }
  bool surjective() const;
  Subgroup preimage(const Subgroup& of_target) const;

private:
  Homomorphism() = default;
  const Group* source_ = nullptr;
  const Group* target_ = nullptr;
  std::vector<ElementIndex> image_;
};

// Pull a valid triple back through a surjective homomorphism:
// (φ⁻¹K, g', φ⁻¹H) with g' the canonically least preimage of g.  The result
// is always valid (asserted; internal_error on failure).
HomoclinicTriple pullback(const Homomorphism& phi, const HomoclinicTriple& t);

// A triple owned together with the (heap-allocated, address-stable) group it
// lives in.
struct OwnedTriple {
  std::shared_ptr<const Group> group;
  HomoclinicTriple triple;
};

// Restrict a triple to a subgroup G₁ ≤ G containing the twist: the candidate
// is (K ∩ G₁, g, H ∩ G₁) computed inside G₁ as its own group.  `valid` on the
// returned triple's flags tells whether the candidate is in fact a triple of
// G₁ (it need not be: the intersection can collapse K or enlarge the
// normalizer).
struct RestrictResult {
  std::shared_ptr<const Group> restricted_group;
  HomoclinicTriple candidate;
  bool valid = false;
};
RestrictResult restrict_triple(const HomoclinicTriple& t, const Subgroup& G1);

// The canonical wreath-product triple for L ≀ T: K is the base group in the
// first copy, the twist is a top element moving the first copy, and H is the
// minimal closure (the base group in the two copies).  g_top is a
// permutation of T's points with g_top(1) != 1 (1-based; domain_error
// otherwise, or if the base is trivial).  The result is always valid with
// the local flag set (internal_error otherwise).
OwnedTriple wreath_canonical_triple(const GroupSpec& base, const GroupSpec& top,
                                    const Permutation& g_top);

// --- dihedral closed form --------------------------------------------------------

// Multiplicity of 2 in m; domain_error for m = 0.
int two_adic_valuation(unsigned long long m);

// Does (K, g, H) = (D_q, rho^r, D_p) give a valid triple of D_{4n}?
// Exact arithmetic conditions; no group is built.
bool d4n_closed_form(int n, int q, int r, int p);

// All (q, r, p) with 0 < r < 2n/q satisfying the closed form, with r folded
// to min(r, 2n/q - r) — reflection conjugacy identifies r with 2n/q - r
// inside one equivalence class — deduplicated and sorted.  Each tuple
// stands for the triple (⟨kappa, rho^(4n/q)⟩, rho^r, ⟨kappa, rho^(4n/p)⟩)
// of the catalog group D(4n) and for its mirror-axis partner.
std::vector<std::array<int, 3>> d4n_enumerate(int n);

// The same tuples recovered the hard way: fully enumerate and classify the
// catalog group D(4n), then read (q, r, p) off each class representative —
// q = |K|/2, p = |H|/2, r the folded exponent of the rotations in the twist
// coset.  Building D(4n) keeps n small (degree cap); agreement with
// d4n_enumerate is the cross-check of the closed form.
std::vector<std::array<int, 3>> d4n_bruteforce_tuples(int n);

// --- robustness ------------------------------------------------------------------

// A group admits a robust connection cycle iff some valid triple carries the
// local flag; it is enough to scan minimal triples (shrinking H to the
// minimal closure preserves both conditions and the local flag).  The
// ambient dimension reported is 2|G|, the real dimension in which a
// realizing vector field always exists (two copies of the regular
// representation).
struct RobustnessReport {
  bool robust = false;
  std::optional<HomoclinicTriple> witness;  // first minimal triple with htl
  int ambient_real_dimension = 0;
};
RobustnessReport robustness_report(const Group& G);

} // namespace eqtriples
