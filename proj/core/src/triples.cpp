#include "eqtriples/triples.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "eqtriples/error.hpp"

namespace eqtriples {

namespace {

void require_in_group(const Group& G, const Subgroup& S, const char* what) {
  if (&S.parent() != &G)
    throw domain_error(std::string(what) + ": subgroup belongs to a different group");
}

void require_element(const Group& G, ElementIndex g, const char* what) {
  if (g >= G.order())
    throw domain_error(std::string(what) + ": element index out of range");
}

} // namespace

bool check_condition1(const Group& G, const Subgroup& K, ElementIndex g, const Subgroup& H) {
  require_in_group(G, K, "check_condition1");
  require_in_group(G, H, "check_condition1");
  require_element(G, g, "check_condition1");
  const Subgroup N = normalizer(G, K);
  for (ElementIndex h : H.members())
    if (N.contains(G.mul(h, g))) return false;
  return true;
}

bool check_condition2(const Group& G, const Subgroup& K, ElementIndex g, const Subgroup& H) {
  require_in_group(G, K, "check_condition2");
  require_in_group(G, H, "check_condition2");
  require_element(G, g, "check_condition2");
  for (ElementIndex k : K.generator_indices()) {
    if (!H.contains(k)) return false;
    if (!H.contains(G.conj(g, k))) return false;
  }
  return true;
}

bool check_local(const Group& G, const Subgroup& K, ElementIndex g, const Subgroup& H) {
  require_in_group(G, K, "check_local");
  require_in_group(G, H, "check_local");
  require_element(G, g, "check_local");
  const Subgroup N1 = normalizer(G, K);
  for (ElementIndex h : H.members())
    if (!N1.contains(h)) return false;
  const Subgroup N2 = normalizer(G, conjugate_subgroup(K, g));
  for (ElementIndex h : H.members())
    if (!N2.contains(h)) return false;
  return true;
}

Subgroup minimal_closure(const Group& G, const Subgroup& K, ElementIndex g) {
  require_in_group(G, K, "minimal_closure");
  require_element(G, g, "minimal_closure");
  std::vector<ElementIndex> gens = K.generator_indices();
  for (ElementIndex k : K.generator_indices()) gens.push_back(G.conj(g, k));
  return generate_subgroup(G, gens);
}

HomoclinicTriple make_triple(const Group& G, const Subgroup& K, ElementIndex g,
                             const Subgroup& H) {
  require_in_group(G, K, "make_triple");
  require_in_group(G, H, "make_triple");
  require_element(G, g, "make_triple");
  TripleFlags flags;
  flags.ht1 = check_condition1(G, K, g, H);
  flags.ht2 = check_condition2(G, K, g, H);
  flags.htl = check_local(G, K, g, H);
  const bool minimal = minimal_closure(G, K, g).members() == H.members();
  return HomoclinicTriple{K, g, H, flags, minimal, std::nullopt};
}

HomoclinicTriple make_triple(const Group& G, const std::vector<Permutation>& k_gens,
                             const Permutation& g, const std::vector<Permutation>& h_gens) {
  return make_triple(G, generate_subgroup(G, k_gens), G.index_of(g),
                     generate_subgroup(G, h_gens));
}

// --- enumeration ---------------------------------------------------------------

std::vector<HomoclinicTriple> enumerate_triples(const Group& G,
                                                const EnumerationOptions& opts) {
  std::vector<Subgroup> ks;
  if (!opts.k_candidates.empty()) {
    for (const Subgroup& K : opts.k_candidates) require_in_group(G, K, "enumerate_triples");
    ks = opts.k_candidates;
    std::sort(ks.begin(), ks.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.members() < b.members();
    });
    ks.erase(std::unique(ks.begin(), ks.end(),
                         [](const Subgroup& a, const Subgroup& b) {
                           return a.members() == b.members();
                         }),
             ks.end());
  } else {
    if (G.order() > kRestrictedModeThreshold)
      throw resource_error(
          "group order " + std::to_string(G.order()) + " exceeds " +
          std::to_string(kRestrictedModeThreshold) +
          "; exhaustive K search is off — supply explicit K candidates (restricted mode)");
    ks = all_subgroups(G);
  }

  std::vector<HomoclinicTriple> out;
  for (const Subgroup& K : ks) {
    const Subgroup N = normalizer(G, K);
    if (N.is_whole_group()) continue;  // normal K (includes trivial and G itself)

    std::vector<bool> seen(static_cast<std::size_t>(G.order()), false);
    for (ElementIndex g = 0; g < G.order(); ++g) {
      if (seen[g]) continue;
      for (ElementIndex c : left_coset(G, g, N)) seen[c] = true;
      if (N.contains(g)) continue;  // twist inside the normalizer never works

      const Subgroup H0 = minimal_closure(G, K, g);
      // if condition 1 fails at the minimal closure it fails for every
      // H ⊇ H0, and condition 2 forces H ⊇ H0
      if (!check_condition1(G, K, g, H0)) continue;

      if (opts.minimal_only) {
        HomoclinicTriple t = make_triple(G, K, g, H0);
        if (!t.valid() || t.H.is_whole_group())
          throw internal_error("enumeration produced an inconsistent minimal triple");
        out.push_back(std::move(t));
      } else {
        for (const Subgroup& H : overgroups(G, H0)) {
          HomoclinicTriple t = make_triple(G, K, g, H);
          if (t.valid()) {
            if (t.H.is_whole_group())
              throw internal_error("a valid triple cannot use the whole group as endpoint");
            out.push_back(std::move(t));
          }
        }
      }
    }
  }
  return out;
}

bool has_triples(const Group& G) {
  EnumerationOptions opts;
  opts.minimal_only = true;
  return !enumerate_triples(G, opts).empty();
}

// --- moves ----------------------------------------------------------------------

HomoclinicTriple shift_twist(const HomoclinicTriple& t, ElementIndex nu) {
  const Group& G = t.group();
  require_element(G, nu, "shift_twist");
  const Subgroup N = normalizer(G, t.K);
  if (!N.contains(nu))
    throw domain_error("shift_twist: the shift element must normalize K");
  return make_triple(G, t.K, G.mul(t.g, nu), t.H);
}

HomoclinicTriple reverse_triple(const HomoclinicTriple& t) {
  const Group& G = t.group();
  const ElementIndex gi = G.inv(t.g);
  return make_triple(G, t.K, gi, conjugate_subgroup(t.H, gi));
}

HomoclinicTriple conjugate_triple(const HomoclinicTriple& t, ElementIndex f) {
  const Group& G = t.group();
  require_element(G, f, "conjugate_triple");
  return make_triple(G, conjugate_subgroup(t.K, f), G.mul(G.mul(f, t.g), G.inv(f)),
                     conjugate_subgroup(t.H, f));
}

HomoclinicTriple normalize_twist(const HomoclinicTriple& t) {
  const Group& G = t.group();
  const Subgroup N = normalizer(G, t.K);
  ElementIndex best = t.g;
  for (ElementIndex nu : N.members()) best = std::min(best, G.mul(t.g, nu));
  return make_triple(G, t.K, best, t.H);
}

// --- classification --------------------------------------------------------------

namespace {

using TripleKey = std::tuple<std::vector<ElementIndex>, ElementIndex, std::vector<ElementIndex>>;

class KeyMaker {
public:
  explicit KeyMaker(const Group& G) : G_(&G) {}

  TripleKey key(const Subgroup& K, ElementIndex g, const Subgroup& H) {
    const Subgroup& N = norm_of(K);
    ElementIndex best = g;
    for (ElementIndex nu : N.members()) best = std::min(best, G_->mul(g, nu));
    return {K.members(), best, H.members()};
  }

private:
  const Subgroup& norm_of(const Subgroup& K) {
    auto it = cache_.find(K.members());
    if (it == cache_.end()) it = cache_.emplace(K.members(), normalizer(*G_, K)).first;
    return it->second;
  }

  const Group* G_;
  std::map<std::vector<ElementIndex>, Subgroup> cache_;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

Classification classify(const Group& G, std::vector<HomoclinicTriple> triples,
                        bool require_closed) {
  for (const HomoclinicTriple& t : triples) require_in_group(G, t.K, "classify");

  KeyMaker keys(G);
  std::map<TripleKey, std::size_t> index;
  std::vector<TripleKey> own_key(triples.size());
  UnionFind uf(triples.size());

  for (std::size_t i = 0; i < triples.size(); ++i) {
    own_key[i] = keys.key(triples[i].K, triples[i].g, triples[i].H);
    auto [it, fresh] = index.emplace(own_key[i], i);
    if (!fresh) uf.unite(i, it->second);  // duplicate input, same class
  }

  auto link = [&](std::size_t i, const Subgroup& K, ElementIndex g, const Subgroup& H) {
    auto it = index.find(keys.key(K, g, H));
    if (it == index.end()) {
      if (require_closed)
        throw internal_error("classify: a move image left the enumerated set");
      return;
    }
    uf.unite(i, it->second);
  };

  for (std::size_t i = 0; i < triples.size(); ++i) {
    const HomoclinicTriple& t = triples[i];
    for (ElementIndex f = 0; f < G.order(); ++f) {
      link(i, conjugate_subgroup(t.K, f), G.mul(G.mul(f, t.g), G.inv(f)),
           conjugate_subgroup(t.H, f));
    }
    const ElementIndex gi = G.inv(t.g);
    link(i, t.K, gi, conjugate_subgroup(t.H, gi));
  }

  // assemble classes, ordered by their least member key
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < triples.size(); ++i) by_root[uf.find(i)].push_back(i);

  std::vector<std::pair<TripleKey, EquivalenceClass>> staged;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    std::size_t rep = members[0];
    for (std::size_t m : members)
      if (own_key[m] < own_key[rep]) rep = m;
    EquivalenceClass cls;
    cls.representative = rep;
    cls.members = members;
    staged.emplace_back(own_key[rep], std::move(cls));
  }
  std::sort(staged.begin(), staged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Classification result;
  result.triples = std::move(triples);
  for (std::size_t c = 0; c < staged.size(); ++c) {
    staged[c].second.id = static_cast<int>(c);
    for (std::size_t m : staged[c].second.members)
      result.triples[m].class_id = static_cast<int>(c);
    result.classes.push_back(std::move(staged[c].second));
  }
  return result;
}

int connection_multiplicity(const HomoclinicTriple& t) {
  const Group& G = t.group();
  const Subgroup twisted = conjugate_subgroup(t.H, G.inv(t.g));
  const Subgroup common = intersect(t.H, twisted);
  if (common.order() % t.K.order() != 0)
    throw domain_error("connection multiplicity undefined: |H ∩ H-twisted| is not a multiple of |K|");
  return common.order() / t.K.order();
}

// --- homomorphisms ----------------------------------------------------------------

Homomorphism Homomorphism::from_generator_images(const Group& source, const Group& target,
                                                 const std::vector<Permutation>& source_gens,
                                                 const std::vector<Permutation>& images) {
  if (source_gens.size() != images.size())
    throw domain_error("from_generator_images: generator/image count mismatch");
  std::vector<ElementIndex> sg, tg;
  for (const Permutation& p : source_gens) sg.push_back(source.index_of(p));
  for (const Permutation& p : images) tg.push_back(target.index_of(p));

  constexpr ElementIndex kUnset = 0xFFFF;
  std::vector<ElementIndex> image(static_cast<std::size_t>(source.order()), kUnset);
  image[source.identity()] = target.identity();
  std::vector<ElementIndex> frontier{source.identity()};
  while (!frontier.empty()) {
    std::vector<ElementIndex> next;
    for (ElementIndex a : frontier) {
      for (std::size_t i = 0; i < sg.size(); ++i) {
        const ElementIndex a2 = source.mul(a, sg[i]);
        const ElementIndex b2 = target.mul(image[a], tg[i]);
        if (image[a2] == kUnset) {
          image[a2] = b2;
          next.push_back(a2);
        } else if (image[a2] != b2) {
          throw domain_error("the generator images do not define a homomorphism");
        }
      }
    }
    frontier = std::move(next);
  }
  for (ElementIndex a = 0; a < source.order(); ++a)
    if (image[a] == kUnset)
      throw domain_error("the given elements do not generate the source group");

  // consistency: every product must map correctly (the BFS already
  // guarantees it for words in the generators, which is all products)
  Homomorphism phi;
  phi.source_ = &source;
  phi.target_ = &target;
  phi.image_ = std::move(image);
  return phi;
}

bool Homomorphism::surjective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target_->order()), false);
  std::size_t n = 0;
  for (ElementIndex b : image_)
    if (!hit[b]) {
      hit[b] = true;
      ++n;
    }
  return n == static_cast<std::size_t>(target_->order());
}

Subgroup Homomorphism::preimage(const Subgroup& of_target) const {
  if (&of_target.parent() != target_)
    throw domain_error("preimage: subgroup does not live in the target group");
  std::vector<ElementIndex> mem;
  for (ElementIndex a = 0; a < source_->order(); ++a)
    if (of_target.contains(image_[a])) mem.push_back(a);
  std::vector<ElementIndex> gens;
  for (ElementIndex m : mem)
    if (m != source_->identity()) gens.push_back(m);
  return Subgroup(*source_, std::move(mem), std::move(gens));
}

HomoclinicTriple pullback(const Homomorphism& phi, const HomoclinicTriple& t) {
  if (&t.group() != &phi.target())
    throw domain_error("pullback: the triple does not live in the homomorphism's target");
  if (!t.valid()) throw domain_error("pullback requires a valid triple");
  if (!phi.surjective()) throw domain_error("pullback requires a surjective homomorphism");

  const Group& S = phi.source();
  ElementIndex g1 = S.order();
  for (ElementIndex a = 0; a < S.order(); ++a)
    if (phi.apply(a) == t.g) {
      g1 = a;
      break;
    }
  if (g1 == S.order()) throw internal_error("surjective map with an element lacking a preimage");

  HomoclinicTriple up = make_triple(S, phi.preimage(t.K), g1, phi.preimage(t.H));
  if (!up.valid())
    throw internal_error("pullback of a valid triple through a surjection failed to validate");
  return up;
}

// --- restriction -------------------------------------------------------------------

RestrictResult restrict_triple(const HomoclinicTriple& t, const Subgroup& G1) {
  const Group& G = t.group();
  require_in_group(G, G1, "restrict_triple");
  if (!G1.contains(t.g))
    throw domain_error("restrict_triple: the subgroup must contain the twist");

  auto mat = std::make_shared<Group>(materialize(G1));
  auto to_mat = [&](const Subgroup& S) {
    const Subgroup common = intersect(S, G1);
    std::vector<Permutation> perms;
    for (ElementIndex m : common.members()) perms.push_back(G.element(m));
    return generate_subgroup(*mat, perms);
  };
  const Subgroup K1 = to_mat(t.K);
  const Subgroup H1 = to_mat(t.H);
  const ElementIndex g1 = mat->index_of(G.element(t.g));
  HomoclinicTriple candidate = make_triple(*mat, K1, g1, H1);
  const bool valid = candidate.valid();
  return RestrictResult{std::move(mat), std::move(candidate), valid};
}

// --- canonical wreath triple ----------------------------------------------------------

OwnedTriple wreath_canonical_triple(const GroupSpec& base, const GroupSpec& top,
                                    const Permutation& g_top) {
  if (base.order() < 2)
    throw domain_error("wreath_canonical_triple: the base group is trivial");
  const Group T = build_group(top);
  if (g_top.degree() != T.degree())
    throw domain_error("wreath_canonical_triple: twist degree does not match the top group");
  if (!T.contains(g_top))
    throw domain_error("wreath_canonical_triple: twist is not an element of the top group");
  if (g_top(0) == 0)
    throw domain_error("wreath_canonical_triple: the twist must move the first copy");

  GroupSpec w;
  w.kind = GroupSpec::Kind::wreath;
  w.children = {base, top};
  auto G = std::make_shared<Group>(build_group(w));

  const Group B = build_group(base);
  const int n = T.degree();
  std::vector<Permutation> k_gens;
  for (const Permutation& b : B.generators()) k_gens.push_back(wreath_embed_base(b, 0, n));
  const Subgroup K = generate_subgroup(*G, k_gens);
  const ElementIndex g = G->index_of(wreath_embed_top(g_top, B.degree()));
  const Subgroup H = minimal_closure(*G, K, g);

  HomoclinicTriple t = make_triple(*G, K, g, H);
  if (!t.valid() || !t.flags.htl)
    throw internal_error("canonical wreath triple failed to validate");
  return OwnedTriple{std::move(G), std::move(t)};
}

// --- dihedral closed form ---------------------------------------------------------------

int two_adic_valuation(unsigned long long m) {
  if (m == 0) throw domain_error("two_adic_valuation(0) is undefined");
  return std::countr_zero(m);
}

namespace {
int positive_mod(long long a, long long m) {
  return static_cast<int>(((a % m) + m) % m);
}
} // namespace

bool d4n_closed_form(int n, int q, int r, int p) {
  if (n < 1 || q < 1 || p < 1) throw domain_error("d4n_closed_form: n, q, p must be positive");
  if (r == 0) return false;
  if (n % q != 0) return false;                                                   // (i)
  const int rq = std::abs(r);
  if (two_adic_valuation(static_cast<unsigned long long>(rq)) >
      two_adic_valuation(static_cast<unsigned long long>(n / q)))
    return false;                                                                 // (ii)
  if (p % q != 0 || p == q || (2 * n) % p != 0) return false;                     // (iii)
  return positive_mod(static_cast<long long>(r) - 2 * n / p, 4 * n / p) == 0;     // (iii)
}

std::vector<std::array<int, 3>> d4n_enumerate(int n) {
  if (n < 1) throw domain_error("d4n_enumerate: n must be positive");
  if (n > 1'000'000) throw resource_error("d4n_enumerate: n too large");
  std::vector<std::array<int, 3>> out;
  for (int q = 1; q <= n; ++q) {
    if (n % q != 0) continue;
    const int sp = 2 * n / q;  // the twist exponent lives in (0, sp)
    for (int r = 1; r < sp; ++r) {
      for (int p = 1; p <= 2 * n; ++p) {
        if ((2 * n) % p != 0) continue;
        if (d4n_closed_form(n, q, r, p))
          out.push_back({q, std::min(r, sp - r), p});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::array<int, 3>> d4n_bruteforce_tuples(int n) {
  if (n < 1) throw domain_error("d4n_bruteforce_tuples: n must be >= 1");
  const Group G = build_group("D" + std::to_string(4 * n));
  Classification cls = classify(G, enumerate_triples(G));

  std::map<ElementIndex, int> dlog;  // rotation -> exponent
  const ElementIndex rho = G.index_of(named_element(G, "rho"));
  ElementIndex cur = G.identity();
  for (int k = 0; k < 4 * n; ++k) {
    dlog[cur] = k;
    cur = G.mul(rho, cur);
  }

  std::vector<std::array<int, 3>> out;
  for (const EquivalenceClass& c : cls.classes) {
    const HomoclinicTriple& t = cls.triples[c.representative];
    const int q = t.K.order() / 2;
    const int p = t.H.order() / 2;
    const int sp = 2 * n / q;
    const Subgroup N = normalizer(G, t.K);
    // all rotations in the twist coset share one exponent mod sp; fold it
    int folded = -1;
    for (ElementIndex nu : N.members()) {
      auto it = dlog.find(G.mul(t.g, nu));
      if (it == dlog.end()) continue;
      const int rr = it->second % sp;
      if (rr == 0)
        throw internal_error("d4n_bruteforce_tuples: twist coset meets the normalizer");
      const int f = std::min(rr, sp - rr);
      if (folded == -1)
        folded = f;
      else if (folded != f)
        throw internal_error("d4n_bruteforce_tuples: inconsistent exponents in one coset");
    }
    if (folded == -1)
      throw internal_error("d4n_bruteforce_tuples: a twist coset contains no rotation");
    out.push_back({q, folded, p});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- robustness ---------------------------------------------------------------------------

RobustnessReport robustness_report(const Group& G) {
  EnumerationOptions opts;
  opts.minimal_only = true;
  RobustnessReport report;
  report.ambient_real_dimension = 2 * G.order();
  for (HomoclinicTriple& t : enumerate_triples(G, opts)) {
    if (t.flags.htl) {
      report.robust = true;
      report.witness = std::move(t);
      break;
    }
  }
  return report;
}

} // namespace eqtriples
