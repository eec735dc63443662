#include "eqtriples/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "eqtriples/error.hpp"

namespace eqtriples {

namespace {

constexpr unsigned long long kOrderSaturation = 1'000'000'000'000ULL;

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kOrderSaturation / b) return kOrderSaturation;
  return a * b;
}

unsigned long long sat_pow(unsigned long long base, int exp) {
  unsigned long long r = 1;
  for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

std::vector<std::string> tokenize_spec(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

GroupSpec parse_atom(const std::string& tok, std::string_view full) {
  const std::string t = lower(tok);
  if (t == "q8") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::quaternion;
    return s;
  }
  if (t.size() < 2)
    throw parse_error("unrecognized group token \"" + tok + "\" in spec \"" +
                      std::string(full) + "\"");
  const char head = t[0];
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw parse_error("unrecognized group token \"" + tok + "\" in spec \"" +
                        std::string(full) + "\"");
  const int n = std::stoi(t.substr(1));
  GroupSpec s;
  s.parameter = n;
  switch (head) {
    case 'c':
    case 'z':
      s.kind = GroupSpec::Kind::cyclic;
      if (n < 1) throw parse_error("cyclic group parameter must be >= 1");
      return s;
    case 'd':
      s.kind = GroupSpec::Kind::dihedral;
      if (n < 3) throw parse_error("dihedral group parameter must be >= 3");
      return s;
    case 's':
      s.kind = GroupSpec::Kind::symmetric;
      if (n < 1) throw parse_error("symmetric group parameter must be >= 1");
      return s;
    default:
      throw parse_error("unrecognized group token \"" + tok + "\" in spec \"" +
                        std::string(full) + "\"");
  }
}

} // namespace

GroupSpec parse_group_spec(std::string_view text) {
  const std::vector<std::string> toks = tokenize_spec(text);
  if (toks.empty()) throw parse_error("empty group spec");

  // split on "x" (loosest), then fold "wr" (left-associative)
  std::vector<GroupSpec> factors;
  std::size_t i = 0;
  while (i < toks.size()) {
    // one wreath chain: atom (wr atom)*
    GroupSpec cur = parse_atom(toks[i], text);
    ++i;
    while (i < toks.size() && lower(toks[i]) == "wr") {
      if (i + 1 >= toks.size())
        throw parse_error("dangling \"wr\" in group spec \"" + std::string(text) + "\"");
      GroupSpec top = parse_atom(toks[i + 1], text);
      GroupSpec w;
      w.kind = GroupSpec::Kind::wreath;
      w.children = {std::move(cur), std::move(top)};
      cur = std::move(w);
      i += 2;
    }
    factors.push_back(std::move(cur));
    if (i < toks.size()) {
      if (lower(toks[i]) != "x")
        throw parse_error("expected \"x\" or \"wr\" at token \"" + toks[i] + "\" in spec \"" +
                          std::string(text) + "\"");
      ++i;
      if (i >= toks.size())
        throw parse_error("dangling \"x\" in group spec \"" + std::string(text) + "\"");
    }
  }
  if (factors.size() == 1) return std::move(factors[0]);
  GroupSpec p;
  p.kind = GroupSpec::Kind::product;
  p.children = std::move(factors);
  return p;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::cyclic: return "C" + std::to_string(parameter);
    case Kind::dihedral: return "D" + std::to_string(parameter);
    case Kind::symmetric: return "S" + std::to_string(parameter);
    case Kind::quaternion: return "Q8";
    case Kind::wreath:
      return children[0].to_string() + " wr " + children[1].to_string();
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += " x ";
        out += children[i].to_string();
      }
      return out;
    }
  }
  throw internal_error("unhandled GroupSpec kind");
}

int GroupSpec::degree() const {
  switch (kind) {
    case Kind::cyclic:
    case Kind::dihedral:
    case Kind::symmetric: return parameter;
    case Kind::quaternion: return 8;
    case Kind::wreath: return children[0].degree() * children[1].degree();
    case Kind::product: {
      int d = 0;
      for (const GroupSpec& c : children) d += c.degree();
      return d;
    }
  }
  throw internal_error("unhandled GroupSpec kind");
}

unsigned long long GroupSpec::order() const {
  switch (kind) {
    case Kind::cyclic: return static_cast<unsigned long long>(parameter);
    case Kind::dihedral: return 2ULL * static_cast<unsigned long long>(parameter);
    case Kind::symmetric: {
      unsigned long long f = 1;
      for (int i = 2; i <= parameter; ++i) f = sat_mul(f, static_cast<unsigned long long>(i));
      return f;
    }
    case Kind::quaternion: return 8;
    case Kind::wreath:
      return sat_mul(sat_pow(children[0].order(), children[1].degree()), children[1].order());
    case Kind::product: {
      unsigned long long o = 1;
      for (const GroupSpec& c : children) o = sat_mul(o, c.order());
      return o;
    }
  }
  throw internal_error("unhandled GroupSpec kind");
}

namespace {

Permutation n_cycle(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
  return Permutation(std::move(img));
}

// reflection j -> 2-j (mod n) on 1-based points; fixes point 1
Permutation dihedral_kappa(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)  // 0-based: j -> (n - j) mod n
    img[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((n - j) % n);
  return Permutation(std::move(img));
}

// base permutation b (degree m) acting on copy `block` (0-based) of n copies
Permutation embed_base(const Permutation& b, int block, int m, int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m * n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  for (int p = 0; p < m; ++p)
    img[static_cast<std::size_t>(block * m + p)] = static_cast<std::uint8_t>(block * m + b(p));
  return Permutation(std::move(img));
}

// top permutation t (degree n) rigidly permuting the copies
Permutation embed_top(const Permutation& t, int m, int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(m) * n);
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < m; ++p)
      img[static_cast<std::size_t>(j * m + p)] = static_cast<std::uint8_t>(t(j) * m + p);
  return Permutation(std::move(img));
}

// A's permutation extended by the identity on B's points (offset selects side)
Permutation embed_factor(const Permutation& p, int offset, int total) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < p.degree(); ++i)
    img[static_cast<std::size_t>(offset + i)] = static_cast<std::uint8_t>(offset + p(i));
  return Permutation(std::move(img));
}

} // namespace

Permutation wreath_embed_base(const Permutation& b, int copy_index, int copies) {
  if (copies < 1 || copy_index < 0 || copy_index >= copies)
    throw domain_error("wreath_embed_base: copy index out of range");
  if (b.degree() * copies > kMaxDegree)
    throw resource_error("wreath_embed_base: embedded degree exceeds the degree cap");
  return embed_base(b, copy_index, b.degree(), copies);
}

Permutation wreath_embed_top(const Permutation& t, int base_degree) {
  if (base_degree < 1) throw domain_error("wreath_embed_top: base degree must be positive");
  if (base_degree * t.degree() > kMaxDegree)
    throw resource_error("wreath_embed_top: embedded degree exceeds the degree cap");
  return embed_top(t, base_degree, t.degree());
}

Group build_group(const GroupSpec& spec) {
  const int deg = spec.degree();
  if (deg > kMaxDegree)
    throw resource_error("spec \"" + spec.to_string() + "\" needs " + std::to_string(deg) +
                         " points; cap is " + std::to_string(kMaxDegree));
  if (spec.order() > static_cast<unsigned long long>(kMaxBuildOrder))
    throw resource_error("spec \"" + spec.to_string() + "\" has order " +
                         std::to_string(spec.order()) + "; build cap is " +
                         std::to_string(kMaxBuildOrder));

  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: {
      const int n = spec.parameter;
      std::vector<Permutation> gens;
      if (n > 1) gens.push_back(n_cycle(n));
      Group G = Group::from_generators(n, std::move(gens), spec.to_string());
      G.register_name("rho", n > 1 ? n_cycle(n) : Permutation::identity(1));
      return G;
    }
    case GroupSpec::Kind::dihedral: {
      const int n = spec.parameter;
      Group G = Group::from_generators(n, {n_cycle(n), dihedral_kappa(n)}, spec.to_string());
      G.register_name("rho", n_cycle(n));
      G.register_name("kappa", dihedral_kappa(n));
      return G;
    }
    case GroupSpec::Kind::symmetric: {
      const int n = spec.parameter;
      std::vector<Permutation> gens;
      if (n >= 2) {
        gens.push_back(parse_permutation("(1 2)", n));
        if (n >= 3) gens.push_back(n_cycle(n));
      }
      return Group::from_generators(n, std::move(gens), spec.to_string());
    }
    case GroupSpec::Kind::quaternion: {
      const Permutation pi = parse_permutation("(1 3 2 4)(5 7 6 8)", 8);
      const Permutation pj = parse_permutation("(1 5 2 6)(3 8 4 7)", 8);
      Group G = Group::from_generators(8, {pi, pj}, spec.to_string());
      G.register_name("i", pi);
      G.register_name("j", pj);
      G.register_name("k", compose(pi, pj));
      return G;
    }
    case GroupSpec::Kind::wreath: {
      const Group base = build_group(spec.children[0]);
      const Group top = build_group(spec.children[1]);
      const int m = base.degree();
      const int n = top.degree();
      std::vector<Permutation> gens;
      for (int j = 0; j < n; ++j)
        for (const Permutation& b : base.generators()) gens.push_back(embed_base(b, j, m, n));
      for (const Permutation& t : top.generators()) gens.push_back(embed_top(t, m, n));
      Group G = Group::from_generators(m * n, std::move(gens), spec.to_string());

      if (!base.generators().empty()) {
        const Permutation& b0 = base.generators()[0];
        for (int j = 0; j < n; ++j)
          G.register_name("kappa_" + std::to_string(j + 1), embed_base(b0, j, m, n));
        G.register_name("kappa", embed_base(b0, 0, m, n));
      }
      const GroupSpec::Kind tk = spec.children[1].kind;
      if (auto r = top.named("rho"))
        G.register_name("rho", embed_top(*r, m, n));
      else if (tk == GroupSpec::Kind::symmetric && n >= 2)
        G.register_name("rho", embed_top(n_cycle(n), m, n));
      if (tk == GroupSpec::Kind::symmetric && n >= 2)
        G.register_name("sigma", embed_top(parse_permutation("(1 2)", n), m, n));
      return G;
    }
    case GroupSpec::Kind::product: {
      std::vector<Permutation> gens;
      int offset = 0;
      for (const GroupSpec& c : spec.children) {
        const Group F = build_group(c);
        for (const Permutation& g : F.generators()) gens.push_back(embed_factor(g, offset, deg));
        offset += F.degree();
      }
      return Group::from_generators(deg, std::move(gens), spec.to_string());
    }
  }
  throw internal_error("unhandled GroupSpec kind");
}

Group build_group(std::string_view spec_text) { return build_group(parse_group_spec(spec_text)); }

// --- element expressions ------------------------------------------------------

namespace {

struct ExprScanner {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

} // namespace

Permutation named_element(const Group& G, std::string_view expression) {
  ExprScanner sc{expression};
  Permutation acc = Permutation::identity(G.degree());
  bool any = false;

  while (!sc.done()) {
    if (sc.s[sc.i] == '*') {  // separator
      ++sc.i;
      continue;
    }
    Permutation term = Permutation::identity(G.degree());
    if (sc.s[sc.i] == '(') {
      // a run of directly adjacent cycle groups forms one term
      const std::size_t start = sc.i;
      while (sc.i < sc.s.size() && sc.s[sc.i] == '(') {
        while (sc.i < sc.s.size() && sc.s[sc.i] != ')') ++sc.i;
        if (sc.i >= sc.s.size())
          throw parse_error("unterminated cycle in expression \"" + std::string(expression) + "\"");
        ++sc.i;  // past ')'
      }
      term = parse_permutation(sc.s.substr(start, sc.i - start), G.degree());
    } else {
      // name: letters, digits, '_', '-'
      const std::size_t start = sc.i;
      while (sc.i < sc.s.size() &&
             (std::isalnum(static_cast<unsigned char>(sc.s[sc.i])) || sc.s[sc.i] == '_' ||
              sc.s[sc.i] == '-')) {
        ++sc.i;
      }
      if (sc.i == start)
        throw parse_error("unexpected character '" + std::string(1, sc.s[sc.i]) +
                          "' in expression \"" + std::string(expression) + "\"");
      const std::string name(sc.s.substr(start, sc.i - start));
      if (name == "e") {
        term = Permutation::identity(G.degree());
      } else if (auto p = G.named(name)) {
        term = *p;
      } else {
        throw parse_error("unknown element name \"" + name + "\" for group " + G.label());
      }
    }
    // optional exponent
    sc.skip_ws();
    if (sc.i < sc.s.size() && sc.s[sc.i] == '^') {
      ++sc.i;
      sc.skip_ws();
      bool neg = false;
      if (sc.i < sc.s.size() && (sc.s[sc.i] == '-' || sc.s[sc.i] == '+')) {
        neg = sc.s[sc.i] == '-';
        ++sc.i;
      }
      if (sc.i >= sc.s.size() || !std::isdigit(static_cast<unsigned char>(sc.s[sc.i])))
        throw parse_error("expected integer exponent in expression \"" + std::string(expression) +
                          "\"");
      long long k = 0;
      while (sc.i < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.i]))) {
        k = k * 10 + (sc.s[sc.i] - '0');
        if (k > 1'000'000) throw parse_error("exponent too large");
        ++sc.i;
      }
      term = power(term, neg ? -k : k);
    }
    acc = compose(acc, term);
    any = true;
  }
  if (!any) throw parse_error("empty element expression");
  return acc;
}

} // namespace eqtriples
