#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqtriples/group.hpp"

namespace eqtriples {

// 64-bit FNV-1a, used to name cache entries.
std::uint64_t fnv1a64(std::string_view bytes);

// Disk persistence for subgroup lattices.  The directory comes from the
// EQTRIPLES_CACHE environment variable (unset or empty → disabled); entries
// are JSON files named "<16 hex digits>.json" by a hash of the schema
// version and the group's spec/degree/order.
//
// The cache is an accelerator only: every load is fully re-verified (schema,
// spec, shape, closure of every subgroup), and anything that fails
// verification is recomputed and overwritten.  Results are therefore
// identical with the cache enabled, disabled, or corrupted.
class LatticeCache {
public:
  static LatticeCache from_env();
  explicit LatticeCache(std::optional<std::filesystem::path> directory);

  bool enabled() const { return directory_.has_value(); }
  const std::optional<std::filesystem::path>& directory() const { return directory_; }

  // all_subgroups(G), served from a verified disk entry when one exists.
  std::vector<Subgroup> subgroups(const Group& G, const std::string& group_spec) const;

  // Where the entry for this group lives (meaningless when disabled).
  std::filesystem::path entry_path(const std::string& group_spec, int degree,
                                   int order) const;

private:
  std::optional<std::filesystem::path> directory_;
};

} // namespace eqtriples
