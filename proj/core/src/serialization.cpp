#include "eqtriples/serialization.hpp"

#include <cstdio>
#include <utility>

#include "eqtriples/catalog.hpp"
#include "eqtriples/error.hpp"
#include "json.hpp"

namespace eqtriples {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error(std::string(what) + ": malformed JSON");
  return j;
}

std::vector<std::string> generator_strings(const Subgroup& S) {
  std::vector<std::string> out;
  for (ElementIndex i : canonical_generators(S))
    out.push_back(S.parent().element(i).cycle_string());
  return out;
}

Subgroup subgroup_from_strings(const Group& G, const json& arr, const char* what) {
  if (!arr.is_array()) throw domain_error(std::string(what) + ": expected an array");
  std::vector<Permutation> gens;
  for (const json& s : arr) {
    if (!s.is_string()) throw domain_error(std::string(what) + ": expected cycle strings");
    gens.push_back(parse_permutation(s.get<std::string>(), G.degree()));
  }
  return generate_subgroup(G, gens);
}

std::optional<int> try_multiplicity(const HomoclinicTriple& t) {
  const Group& G = t.group();
  const ElementIndex gi = G.inv(t.g);
  const Subgroup twisted = conjugate_subgroup(t.H, gi);
  const int common = intersect(t.H, twisted).order();
  if (common % t.K.order() != 0) return std::nullopt;
  return common / t.K.order();
}

json triple_json_object(const HomoclinicTriple& t, const std::string& group_spec) {
  json j;
  j["group_spec"] = group_spec;
  j["K_generators"] = generator_strings(t.K);
  j["g"] = t.group().element(t.g).cycle_string();
  j["H_generators"] = generator_strings(t.H);
  j["flags"] = {{"ht1", t.flags.ht1}, {"ht2", t.flags.ht2}, {"htl", t.flags.htl}};
  j["minimal"] = t.minimal;
  const std::optional<int> mult = try_multiplicity(t);
  if (mult)
    j["multiplicity"] = *mult;
  else
    j["multiplicity"] = nullptr;
  if (t.class_id)
    j["class_id"] = *t.class_id;
  else
    j["class_id"] = nullptr;
  return j;
}

OwnedTriple triple_from_object_impl(const json& j) {
  if (!j.is_object()) throw domain_error("triple payload: expected an object");
  for (const char* key :
       {"group_spec", "K_generators", "g", "H_generators", "flags", "minimal",
        "multiplicity", "class_id"})
    if (!j.contains(key))
      throw domain_error(std::string("triple payload: missing field '") + key + "'");

  auto group = std::make_shared<const Group>(build_group(j["group_spec"].get<std::string>()));
  const Subgroup K = subgroup_from_strings(*group, j["K_generators"], "K_generators");
  const Subgroup H = subgroup_from_strings(*group, j["H_generators"], "H_generators");
  const Permutation g = parse_permutation(j["g"].get<std::string>(), group->degree());
  if (!group->contains(g)) throw domain_error("triple payload: twist is not a group element");

  HomoclinicTriple t = make_triple(*group, K, group->index_of(g), H);

  const json& flags = j["flags"];
  if (flags["ht1"].get<bool>() != t.flags.ht1 || flags["ht2"].get<bool>() != t.flags.ht2 ||
      flags["htl"].get<bool>() != t.flags.htl)
    throw domain_error("triple payload: stored flags disagree with the recomputed ones");
  if (j["minimal"].get<bool>() != t.minimal)
    throw domain_error("triple payload: stored minimal marker disagrees");
  const std::optional<int> mult = try_multiplicity(t);
  if (j["multiplicity"].is_null() ? mult.has_value()
                                  : (!mult || *mult != j["multiplicity"].get<int>()))
    throw domain_error("triple payload: stored multiplicity disagrees");
  if (!j["class_id"].is_null()) t.class_id = j["class_id"].get<int>();

  return OwnedTriple{std::move(group), std::move(t)};
}

// Missing fields and wrong JSON types surface as nlohmann exceptions; fold
// them into the library's error hierarchy so callers can treat any bad
// payload uniformly.
OwnedTriple triple_from_object(const json& j) {
  try {
    return triple_from_object_impl(j);
  } catch (const json::exception& e) {
    throw domain_error(std::string("triple payload: ") + e.what());
  }
}

ParsedCycleReport cycle_report_from_object(const json& j) {
  ParsedCycleReport r;
  r.status = j.at("status").get<std::string>();
  r.eps = j.at("eps").get<double>();
  r.visit_sequence = j.at("visit_sequence").get<std::vector<std::string>>();
  r.dwell_times = j.at("dwell_times").get<std::vector<double>>();
  r.min_distances = j.at("min_distances").get<std::vector<double>>();
  r.complete = j.at("complete").get<std::vector<bool>>();
  r.approaches_cycle = j.at("approaches_cycle").get<bool>();
  r.bounded = j.at("bounded").get<bool>();
  r.max_norm_squared = j.at("max_norm_squared").get<double>();
  const std::size_t n = r.visit_sequence.size();
  if (r.dwell_times.size() != n || r.min_distances.size() != n || r.complete.size() != n)
    throw domain_error("cycle report: per-visit arrays have mismatched lengths");
  if (!j.at("extracted").is_null()) r.extracted = triple_from_object(j.at("extracted"));
  return r;
}

} // namespace

std::vector<ElementIndex> canonical_generators(const Subgroup& S) {
  std::vector<ElementIndex> gens;
  Subgroup span = trivial_subgroup(S.parent());
  for (ElementIndex m : S.members()) {
    if (span.order() == S.order()) break;
    if (span.contains(m)) continue;
    gens.push_back(m);
    span = generate_subgroup(S.parent(), gens);
  }
  return gens;
}

std::string triple_to_json(const HomoclinicTriple& t, const std::string& group_spec) {
  return triple_json_object(t, group_spec).dump();
}

std::string triples_to_json(const std::vector<HomoclinicTriple>& triples,
                            const std::string& group_spec) {
  json arr = json::array();
  for (const HomoclinicTriple& t : triples) arr.push_back(triple_json_object(t, group_spec));
  return arr.dump();
}

OwnedTriple triple_from_json(const std::string& text) {
  return triple_from_object(parse_json(text, "triple payload"));
}

std::string cycle_report_to_json(const CycleReport& report,
                                 const std::optional<HomoclinicTriple>& extracted,
                                 const std::string& group_spec) {
  json j;
  j["status"] = report.status;
  j["eps"] = report.eps;
  json labels = json::array(), dwells = json::array(), dists = json::array(),
       complete = json::array();
  for (const Visit& v : report.visits) {
    labels.push_back(v.label);
    dwells.push_back(v.dwell);
    dists.push_back(v.min_distance);
    complete.push_back(v.complete);
  }
  j["visit_sequence"] = std::move(labels);
  j["dwell_times"] = std::move(dwells);
  j["min_distances"] = std::move(dists);
  j["complete"] = std::move(complete);
  j["approaches_cycle"] = report.approaches_cycle;
  j["bounded"] = report.bounded;
  j["max_norm_squared"] = report.max_norm_squared;
  if (extracted)
    j["extracted"] = triple_json_object(*extracted, group_spec);
  else
    j["extracted"] = nullptr;
  return j.dump();
}

ParsedCycleReport cycle_report_from_json(const std::string& text) {
  const json j = parse_json(text, "cycle report");
  if (!j.is_object()) throw domain_error("cycle report: expected an object");
  try {
    return cycle_report_from_object(j);
  } catch (const json::exception& e) {
    throw domain_error(std::string("cycle report: ") + e.what());
  }
}

std::string subgroups_to_json(const Group& G, const std::string& group_spec,
                              const std::vector<Subgroup>& subgroups) {
  json j;
  j["schema"] = kSubgroupSchemaVersion;
  j["group_spec"] = group_spec;
  j["degree"] = G.degree();
  j["order"] = G.order();
  json lists = json::array();
  for (const Subgroup& S : subgroups) lists.push_back(S.members());
  j["subgroups"] = std::move(lists);
  return j.dump();
}

namespace {

std::vector<Subgroup> subgroups_from_object(const Group& G, const std::string& group_spec,
                                            const json& j) {
  if (!j.is_object()) throw domain_error("subgroup list: expected an object");
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != kSubgroupSchemaVersion)
    throw domain_error("subgroup list: unsupported schema version");
  if (j.at("group_spec").get<std::string>() != group_spec)
    throw domain_error("subgroup list: stored for a different group spec");
  if (j.at("degree").get<int>() != G.degree() || j.at("order").get<int>() != G.order())
    throw domain_error("subgroup list: stored group shape disagrees");

  const json& lists = j.at("subgroups");
  if (!lists.is_array() || lists.empty())
    throw domain_error("subgroup list: expected a non-empty array");

  std::vector<Subgroup> out;
  out.reserve(lists.size());
  for (const json& entry : lists) {
    if (!entry.is_array() || entry.empty())
      throw domain_error("subgroup list: expected non-empty index arrays");
    std::vector<ElementIndex> members;
    members.reserve(entry.size());
    for (const json& v : entry) {
      if (!v.is_number_unsigned() && !v.is_number_integer())
        throw domain_error("subgroup list: member indices must be integers");
      const long long raw = v.get<long long>();
      if (raw < 0 || raw >= G.order())
        throw domain_error("subgroup list: member index out of range");
      members.push_back(static_cast<ElementIndex>(raw));
    }
    for (std::size_t i = 1; i < members.size(); ++i)
      if (members[i - 1] >= members[i])
        throw domain_error("subgroup list: members must be strictly ascending");
    // full closure verification: the stored set must be exactly a subgroup
    Subgroup closed = generate_subgroup(G, members);
    if (closed.members() != members)
      throw domain_error("subgroup list: a stored member set is not closed");
    out.push_back(std::move(closed));
  }
  return out;
}

} // namespace

std::vector<Subgroup> subgroups_from_json(const Group& G, const std::string& group_spec,
                                          const std::string& text) {
  const json j = parse_json(text, "subgroup list");
  try {
    return subgroups_from_object(G, group_spec, j);
  } catch (const json::exception& e) {
    throw domain_error(std::string("subgroup list: ") + e.what());
  }
}

std::string trajectory_to_csv(const Trajectory& trajectory) {
  std::string out = "t,x1,x2,x3\n";
  char line[160];
  for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
    const Vec3& x = trajectory.states[i];
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", trajectory.times[i],
                  x[0], x[1], x[2]);
    out += line;
  }
  return out;
}

} // namespace eqtriples
