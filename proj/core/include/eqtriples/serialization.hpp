#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqtriples/dynamics.hpp"
#include "eqtriples/group.hpp"
#include "eqtriples/triples.hpp"

namespace eqtriples {

// Schema version embedded in persisted subgroup lists; bump on any change to
// the layout below.
inline constexpr int kSubgroupSchemaVersion = 1;

// A small deterministic generating set for S: members are scanned in
// canonical order and kept when they enlarge the generated subgroup.  The
// trivial subgroup yields an empty list.
std::vector<ElementIndex> canonical_generators(const Subgroup& S);

// --- triples ---------------------------------------------------------------
//
// Layout (stable field names, arrays in canonical order):
//   {group_spec, K_generators: [cycle strings], g: cycle string,
//    H_generators: [cycle strings], flags: {ht1, ht2, htl}, minimal,
//    multiplicity, class_id}
// multiplicity and class_id are null when undefined (|K| does not divide the
// intersection count / the triple was never classified).

std::string triple_to_json(const HomoclinicTriple& t, const std::string& group_spec);
std::string triples_to_json(const std::vector<HomoclinicTriple>& triples,
                            const std::string& group_spec);

// Rebuild the group from the embedded spec and the triple from its generator
// strings.  All flags, the minimal marker and the multiplicity are recomputed
// and must agree with the stored values (domain_error otherwise); class_id is
// carried through verbatim.
OwnedTriple triple_from_json(const std::string& text);

// --- cycle reports -----------------------------------------------------------
//
// Layout: {status, eps, visit_sequence: [labels], dwell_times, min_distances,
//          complete: [bools], approaches_cycle, bounded, max_norm_squared,
//          extracted: triple object | null}

std::string cycle_report_to_json(const CycleReport& report,
                                 const std::optional<HomoclinicTriple>& extracted,
                                 const std::string& group_spec);

struct ParsedCycleReport {
  std::string status;
  double eps = 0.0;
  std::vector<std::string> visit_sequence;
  std::vector<double> dwell_times;
  std::vector<double> min_distances;
  std::vector<bool> complete;
  bool approaches_cycle = false;
  bool bounded = false;
  double max_norm_squared = 0.0;
  std::optional<OwnedTriple> extracted;
};

ParsedCycleReport cycle_report_from_json(const std::string& text);

// --- subgroup lists (persisted lattice payload) ---------------------------------
//
// Layout: {schema, group_spec, degree, order, subgroups: [[member indices]]}.
// Loading re-verifies everything: schema, spec, degree, order, and closure of
// every member list (identity present, products and inverses inside).  Any
// mismatch throws (parse_error for malformed JSON, domain_error for wrong
// content) — callers treat both as a miss and recompute.

std::string subgroups_to_json(const Group& G, const std::string& group_spec,
                              const std::vector<Subgroup>& subgroups);
std::vector<Subgroup> subgroups_from_json(const Group& G, const std::string& group_spec,
                                          const std::string& text);

// --- trajectories ----------------------------------------------------------------

// "t,x1,x2,x3" header plus one row per sample; full round-trip precision.
std::string trajectory_to_csv(const Trajectory& trajectory);

} // namespace eqtriples
