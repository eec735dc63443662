#include "eqtriples/group.hpp"

#include <algorithm>
#include <set>

#include "eqtriples/error.hpp"

namespace eqtriples {

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b, const char* what) {
  if (&a.parent() != &b.parent())
    throw domain_error(std::string(what) + ": subgroups have different parent groups");
}

std::vector<ElementIndex> closure_indices(const Group& G,
                                          const std::vector<ElementIndex>& gens) {
  std::vector<bool> in(static_cast<std::size_t>(G.order()), false);
  std::vector<ElementIndex> frontier;
  in[G.identity()] = true;
  std::vector<ElementIndex> members{G.identity()};
  frontier.push_back(G.identity());
  while (!frontier.empty()) {
    std::vector<ElementIndex> next;
    for (ElementIndex a : frontier) {
      for (ElementIndex g : gens) {
        ElementIndex p = G.mul(a, g);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
          next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

} // namespace

// --- Group -------------------------------------------------------------------

Group Group::from_generators(int degree, std::vector<Permutation> generators,
                             std::string label) {
  if (degree < 1 || degree > kMaxDegree)
    throw domain_error("group degree " + std::to_string(degree) + " out of range 1.." +
                       std::to_string(kMaxDegree));
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw domain_error("generator degree mismatch in group construction");

  // breadth-first closure over permutations
  std::set<Permutation> seen;
  std::vector<Permutation> order;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  order.push_back(id);
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& a : frontier) {
      for (const Permutation& g : generators) {
        Permutation p = compose(a, g);
        if (seen.insert(p).second) {
          if (static_cast<int>(seen.size()) > kMaxBuildOrder)
            throw resource_error("group order exceeds build cap " +
                                 std::to_string(kMaxBuildOrder));
          order.push_back(std::move(p));
          next.push_back(order.back());
        }
      }
    }
    frontier = std::move(next);
  }

  Group G;
  G.degree_ = degree;
  G.label_ = std::move(label);
  G.elements_.assign(seen.begin(), seen.end());  // sorted: std::set iterates in order
  G.generators_ = std::move(generators);

  const std::size_t n = G.elements_.size();
  if (!G.elements_[0].is_identity())
    throw internal_error("identity is not the least element");

  G.mul_.resize(n * n);
  G.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Permutation p = compose(G.elements_[a], G.elements_[b]);
      auto it = std::lower_bound(G.elements_.begin(), G.elements_.end(), p);
      if (it == G.elements_.end() || !(*it == p))
        throw internal_error("closure is not closed under composition");
      ElementIndex idx = static_cast<ElementIndex>(it - G.elements_.begin());
      G.mul_[a * n + b] = idx;
      if (idx == 0) G.inv_[a] = static_cast<ElementIndex>(b);
    }
  }
  return G;
}

ElementIndex Group::index_of(const Permutation& p) const {
  auto idx = try_index_of(p);
  if (!idx)
    throw domain_error("permutation " + p.cycle_string() + " is not an element of the group" +
                       (label_.empty() ? "" : " " + label_));
  return *idx;
}

std::optional<ElementIndex> Group::try_index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<ElementIndex>(it - elements_.begin());
}

void Group::register_name(std::string name, const Permutation& value) {
  names_[std::move(name)] = index_of(value);
}

std::optional<Permutation> Group::named(std::string_view name) const {
  auto it = names_.find(name);
  if (it == names_.end()) return std::nullopt;
  return elements_[it->second];
}

// --- Subgroup ----------------------------------------------------------------

Subgroup::Subgroup(const Group& parent, std::vector<ElementIndex> sorted_members,
                   std::vector<ElementIndex> generator_indices)
    : parent_(&parent), members_(std::move(sorted_members)), gens_(std::move(generator_indices)) {
  if (members_.empty() || members_[0] != parent.identity())
    throw domain_error("subgroup must contain the identity");
  mask_.assign((static_cast<std::size_t>(parent.order()) + 63) / 64, 0);
  ElementIndex prev = members_[0];
  for (std::size_t i = 0; i < members_.size(); ++i) {
    ElementIndex m = members_[i];
    if (i > 0 && m <= prev) throw domain_error("subgroup members must be sorted and unique");
    prev = m;
    if (m >= parent.order()) throw domain_error("subgroup member index out of range");
    mask_[m >> 6] |= 1ULL << (m & 63);
  }
}

std::vector<Permutation> Subgroup::generator_perms() const {
  std::vector<Permutation> out;
  out.reserve(gens_.size());
  for (ElementIndex g : gens_) out.push_back(parent_->element(g));
  return out;
}

// --- construction ------------------------------------------------------------

Subgroup generate_subgroup(const Group& G, const std::vector<ElementIndex>& generator_indices) {
  for (ElementIndex g : generator_indices)
    if (g >= G.order()) throw domain_error("generator index out of range");
  std::vector<ElementIndex> mem = closure_indices(G, generator_indices);
  // drop redundant generators (those equal to identity)
  std::vector<ElementIndex> gens;
  for (ElementIndex g : generator_indices)
    if (g != G.identity()) gens.push_back(g);
  return Subgroup(G, std::move(mem), std::move(gens));
}

Subgroup generate_subgroup(const Group& G, const std::vector<Permutation>& generators) {
  std::vector<ElementIndex> idx;
  idx.reserve(generators.size());
  for (const Permutation& p : generators) idx.push_back(G.index_of(p));
  return generate_subgroup(G, idx);
}

Subgroup trivial_subgroup(const Group& G) {
  return Subgroup(G, {G.identity()}, {});
}

Subgroup whole_group(const Group& G) {
  std::vector<ElementIndex> mem(static_cast<std::size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) mem[static_cast<std::size_t>(i)] = static_cast<ElementIndex>(i);
  std::vector<ElementIndex> gens;
  for (const Permutation& g : G.generators()) gens.push_back(G.index_of(g));
  return Subgroup(G, std::move(mem), std::move(gens));
}

// --- operations --------------------------------------------------------------

Subgroup conjugate_subgroup(const Subgroup& K, ElementIndex g) {
  const Group& G = K.parent();
  if (g >= G.order()) throw domain_error("conjugating element index out of range");
  std::vector<ElementIndex> mem;
  mem.reserve(K.members().size());
  for (ElementIndex k : K.members()) mem.push_back(G.conj(g, k));
  std::sort(mem.begin(), mem.end());
  std::vector<ElementIndex> gens;
  gens.reserve(K.generator_indices().size());
  for (ElementIndex k : K.generator_indices()) gens.push_back(G.conj(g, k));
  return Subgroup(G, std::move(mem), std::move(gens));
}

Subgroup conjugate_subgroup(const Subgroup& K, const Permutation& g) {
  return conjugate_subgroup(K, K.parent().index_of(g));
}

Subgroup normalizer(const Group& G, const Subgroup& K) {
  std::vector<ElementIndex> mem;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    bool ok = true;
    // gKg⁻¹ ⊆ K on generators suffices (finite, equal orders)
    for (ElementIndex k : K.generator_indices()) {
      if (!K.contains(G.conj(g, k))) { ok = false; break; }
    }
    if (ok) mem.push_back(g);
  }
  // Generators of N: just record the members as generators only if small;
  // keep a compact generating set by greedy closure instead.
  std::vector<ElementIndex> gens;
  {
    std::vector<bool> have(static_cast<std::size_t>(G.order()), false);
    std::vector<ElementIndex> cur{G.identity()};
    have[G.identity()] = true;
    std::size_t covered = 1;
    for (ElementIndex m : mem) {
      if (have[m]) continue;
      gens.push_back(m);
      // extend closure with m
      std::vector<ElementIndex> frontier = cur;
      frontier.push_back(m);
      cur.push_back(m);
      have[m] = true;
      ++covered;
      std::vector<ElementIndex> work = frontier;
      while (!work.empty()) {
        std::vector<ElementIndex> nxt;
        for (ElementIndex a : work) {
          for (ElementIndex b : gens) {
            ElementIndex p = G.mul(a, b);
            if (!have[p]) { have[p] = true; cur.push_back(p); nxt.push_back(p); ++covered; }
            p = G.mul(b, a);
            if (!have[p]) { have[p] = true; cur.push_back(p); nxt.push_back(p); ++covered; }
          }
        }
        work = std::move(nxt);
      }
      if (covered == mem.size()) break;
    }
  }
  return Subgroup(G, std::move(mem), std::move(gens));
}

std::vector<ElementIndex> left_coset(const Group& G, ElementIndex g, const Subgroup& H) {
  if (&G != &H.parent()) throw domain_error("left_coset: subgroup of a different group");
  if (g >= G.order()) throw domain_error("left_coset: element index out of range");
  std::vector<ElementIndex> out;
  out.reserve(H.members().size());
  for (ElementIndex h : H.members()) out.push_back(G.mul(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementIndex> right_coset(const Group& G, const Subgroup& H, ElementIndex g) {
  if (&G != &H.parent()) throw domain_error("right_coset: subgroup of a different group");
  if (g >= G.order()) throw domain_error("right_coset: element index out of range");
  std::vector<ElementIndex> out;
  out.reserve(H.members().size());
  for (ElementIndex h : H.members()) out.push_back(G.mul(h, g));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer) {
  require_same_parent(inner, outer, "is_subgroup_of");
  for (ElementIndex m : inner.members())
    if (!outer.contains(m)) return false;
  return true;
}

bool is_normal(const Subgroup& sub, const Subgroup& in) {
  require_same_parent(sub, in, "is_normal");
  if (!is_subgroup_of(sub, in))
    throw domain_error("is_normal: first argument is not contained in second");
  const Group& G = sub.parent();
  for (ElementIndex h : in.members())
    for (ElementIndex k : sub.generator_indices())
      if (!sub.contains(G.conj(h, k))) return false;
  return true;
}

bool is_normal_in_parent(const Subgroup& K) {
  const Group& G = K.parent();
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (ElementIndex k : K.generator_indices())
      if (!K.contains(G.conj(g, k))) return false;
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "intersect");
  std::vector<ElementIndex> mem;
  for (ElementIndex m : a.members())
    if (b.contains(m)) mem.push_back(m);
  // generating set: the members themselves (small groups); compacted below
  std::vector<ElementIndex> gens;
  for (ElementIndex m : mem)
    if (m != a.parent().identity()) gens.push_back(m);
  return Subgroup(a.parent(), std::move(mem), std::move(gens));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "join");
  std::vector<ElementIndex> gens = a.generator_indices();
  gens.insert(gens.end(), b.generator_indices().begin(), b.generator_indices().end());
  return generate_subgroup(a.parent(), gens);
}

// --- lattice -----------------------------------------------------------------

namespace {

// Join-closure engine: starting from `seeds`, close under joining with each
// cyclic subgroup ⟨x⟩, x ∈ G.  Returns all subgroups generated this way.
// With seeds = {trivial} this yields every subgroup of G; with seeds = {H0}
// every overgroup of H0.
std::vector<Subgroup> join_closure(const Group& G, std::vector<Subgroup> seeds) {
  // cyclic building blocks, deduplicated
  std::set<std::vector<ElementIndex>> cyc_seen;
  std::vector<ElementIndex> cyc_gens;  // one generator per distinct cyclic subgroup
  for (ElementIndex x = 1; x < G.order(); ++x) {
    std::vector<ElementIndex> mem = closure_indices(G, {x});
    if (cyc_seen.insert(std::move(mem)).second) cyc_gens.push_back(x);
  }

  std::map<std::vector<ElementIndex>, std::vector<ElementIndex>> found;  // members -> gens
  std::vector<std::pair<std::vector<ElementIndex>, std::vector<ElementIndex>>> queue;
  for (const Subgroup& s : seeds)
    if (found.emplace(s.members(), s.generator_indices()).second)
      queue.emplace_back(s.members(), s.generator_indices());

  while (!queue.empty()) {
    auto [mem, gens] = std::move(queue.back());
    queue.pop_back();
    for (ElementIndex x : cyc_gens) {
      // skip if x already inside
      if (std::binary_search(mem.begin(), mem.end(), x)) continue;
      std::vector<ElementIndex> jg = gens;
      jg.push_back(x);
      std::vector<ElementIndex> jm = closure_indices(G, jg);
      auto it = found.find(jm);
      if (it == found.end()) {
        found.emplace(jm, jg);
        queue.emplace_back(std::move(jm), std::move(jg));
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [mem, gens] : found) out.emplace_back(G, mem, gens);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

} // namespace

std::vector<Subgroup> all_subgroups(const Group& G) {
  if (G.order() > kFullEnumerationCap)
    throw resource_error("group order " + std::to_string(G.order()) +
                         " exceeds the exhaustive-enumeration cap " +
                         std::to_string(kFullEnumerationCap));
  return join_closure(G, {trivial_subgroup(G)});
}

std::vector<Subgroup> overgroups(const Group& G, const Subgroup& H0) {
  if (&G != &H0.parent()) throw domain_error("overgroups: subgroup of a different group");
  return join_closure(G, {H0});
}

Group materialize(const Subgroup& H, std::string label) {
  std::vector<Permutation> gens;
  for (ElementIndex m : H.members()) gens.push_back(H.parent().element(m));
  return Group::from_generators(H.parent().degree(), std::move(gens),
                                label.empty() ? H.parent().label() + " subgroup" : std::move(label));
}

} // namespace eqtriples
