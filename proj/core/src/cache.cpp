#include "eqtriples/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eqtriples/error.hpp"
#include "eqtriples/serialization.hpp"

namespace eqtriples {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

LatticeCache LatticeCache::from_env() {
  const char* dir = std::getenv("EQTRIPLES_CACHE");
  if (dir == nullptr || *dir == '\0') return LatticeCache(std::nullopt);
  return LatticeCache(fs::path(dir));
}

LatticeCache::LatticeCache(std::optional<fs::path> directory)
    : directory_(std::move(directory)) {}

fs::path LatticeCache::entry_path(const std::string& group_spec, int degree,
                                  int order) const {
  std::ostringstream key;
  key << "eqtriples-subgroups|schema=" << kSubgroupSchemaVersion << "|spec=" << group_spec
      << "|degree=" << degree << "|order=" << order;
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.json",
                static_cast<unsigned long long>(fnv1a64(key.str())));
  return (directory_ ? *directory_ : fs::path(".")) / name;
}

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return buf.str();
}

// Atomic publish: write next to the target, then rename over it.
void write_file_atomically(const fs::path& target, const std::string& content) {
  fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(static_cast<unsigned long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out.good()) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return;  // persistence is best-effort; the result is already computed
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

} // namespace

std::vector<Subgroup> LatticeCache::subgroups(const Group& G,
                                              const std::string& group_spec) const {
  if (!enabled()) return all_subgroups(G);

  const fs::path entry = entry_path(group_spec, G.degree(), G.order());
  if (std::optional<std::string> text = read_file(entry)) {
    try {
      return subgroups_from_json(G, group_spec, *text);
    } catch (const error&) {
      // stale or corrupt entry: fall through and recompute
    }
  }
  std::vector<Subgroup> computed = all_subgroups(G);
  write_file_atomically(entry, subgroups_to_json(G, group_spec, computed));
  return computed;
}

} // namespace eqtriples
