#include "eqtriples/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "eqtriples/error.hpp"

namespace eqtriples {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0) throw domain_error("permutation degree must be at least 1");
  if (n > static_cast<std::size_t>(kMaxDegree))
    throw domain_error("permutation degree " + std::to_string(n) + " exceeds cap " +
                       std::to_string(kMaxDegree));
  std::vector<bool> seen(n, false);
  for (std::uint8_t v : images_) {
    if (v >= n) throw domain_error("permutation image out of range");
    if (seen[v]) throw domain_error("permutation image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw domain_error("permutation degree out of range");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::cycle_string() const {
  const int n = degree();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (done[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start)
      continue;
    out += '(';
    int p = start;
    bool first = true;
    do {
      done[static_cast<std::size_t>(p)] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = images_[static_cast<std::size_t>(p)];
    } while (p != start);
    out += ')';
  }
  if (out.empty()) return "e";
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw domain_error("compose: degree mismatch (" + std::to_string(a.degree()) + " vs " +
                       std::to_string(b.degree()) + ")");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i)
    img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a(b(i)));
  return Permutation(std::move(img));
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw parse_error("degree out of range for permutation parse");
  // trim
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view s = text.substr(b, e - b);

  if (s.empty() || s == "e" || s == "()") return Permutation::identity(degree);

  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
    if (s[i] != '(')
      throw parse_error("expected '(' in cycle notation: \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> pts;
    while (true) {
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
        ++i;
      if (i >= s.size()) throw parse_error("unterminated cycle: \"" + std::string(text) + "\"");
      if (s[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error("expected point number in cycle: \"" + std::string(text) + "\"");
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > kMaxDegree) throw parse_error("point out of range in cycle: \"" + std::string(text) + "\"");
        ++i;
      }
      if (v < 1 || v > degree)
        throw parse_error("point " + std::to_string(v) + " out of range 1.." +
                          std::to_string(degree));
      pts.push_back(v - 1);
    }
    if (pts.empty()) continue;  // "()" inside a product of cycles
    for (int p : pts) {
      if (used[static_cast<std::size_t>(p)])
        throw parse_error("point " + std::to_string(p + 1) +
                          " repeated; cycles must be disjoint: \"" + std::string(text) + "\"");
      used[static_cast<std::size_t>(p)] = true;
    }
    for (std::size_t k = 0; k < pts.size(); ++k)
      img[static_cast<std::size_t>(pts[k])] =
          static_cast<std::uint8_t>(pts[(k + 1) % pts.size()]);
  }
  return Permutation(std::move(img));
}

Permutation power(const Permutation& a, long long k) {
  Permutation base = k < 0 ? a.inverse() : a;
  unsigned long long m = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                               : static_cast<unsigned long long>(k);
  Permutation acc = Permutation::identity(a.degree());
  while (m > 0) {
    if (m & 1ULL) acc = compose(acc, base);
    base = compose(base, base);
    m >>= 1ULL;
  }
  return acc;
}

int order_of(const Permutation& a) {
  Permutation p = a;
  int k = 1;
  while (!p.is_identity()) {
    p = compose(p, a);
    ++k;
  }
  return k;
}

} // namespace eqtriples
