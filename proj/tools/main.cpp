// Command-line front end: enumerate, classify and verify homoclinic triples
// in small permutation groups, run the coupled-cell demonstration system,
// and inspect subgroup lattices.
//
// Exit codes: 0 success, 1 usage or input error, 2 resource cap exceeded,
// 3 verification mismatch, 70 internal invariant failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqtriples/cache.hpp"
#include "eqtriples/catalog.hpp"
#include "eqtriples/characters.hpp"
#include "eqtriples/dynamics.hpp"
#include "eqtriples/error.hpp"
#include "eqtriples/reference_tables.hpp"
#include "eqtriples/serialization.hpp"
#include "eqtriples/triples.hpp"
#include "json.hpp"

using namespace eqtriples;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInternal = 70;

// Split on commas that sit outside parentheses, so cycle strings with
// internal commas ("(1,2)") survive.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t expected,
                                  const char* what) {
  const std::vector<std::string> parts = split_top_level(text);
  if (parts.size() != expected)
    throw domain_error(std::string(what) + ": expected " + std::to_string(expected) +
                       " comma-separated values");
  std::vector<double> out;
  for (const std::string& p : parts) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(p, &used));
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw domain_error(std::string(what) + ": '" + p + "' is not a number");
    }
  }
  return out;
}

std::string generator_list(const Subgroup& S) {
  const std::vector<ElementIndex> gens = canonical_generators(S);
  if (gens.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += S.parent().element(gens[i]).cycle_string();
  }
  return out;
}

void print_triple_table(const std::vector<HomoclinicTriple>& triples, bool classified) {
  std::printf("%-28s | %-16s | %-34s | %-5s | %-7s | %4s%s\n", "K generators", "twist",
              "H generators", "local", "minimal", "mult", classified ? " | class" : "");
  for (const HomoclinicTriple& t : triples) {
    std::printf("%-28s | %-16s | %-34s | %-5s | %-7s | %4d", generator_list(t.K).c_str(),
                t.group().element(t.g).cycle_string().c_str(),
                generator_list(t.H).c_str(), t.flags.htl ? "yes" : "no",
                t.minimal ? "yes" : "no", connection_multiplicity(t));
    if (classified) std::printf(" | %5d", t.class_id.value_or(-1));
    std::printf("\n");
  }
}

// --- triples -------------------------------------------------------------------

struct TriplesArgs {
  std::string spec;
  bool minimal = false;
  bool classify_flag = false;
  bool json_flag = false;
  std::vector<std::string> k_gens;
};

int cmd_triples(const TriplesArgs& args) {
  const GroupSpec spec = parse_group_spec(args.spec);
  const std::string canonical = spec.to_string();
  const Group G = build_group(spec);

  EnumerationOptions opts;
  opts.minimal_only = args.minimal;
  const bool restricted = !args.k_gens.empty();
  if (restricted) {
    for (const std::string& one : args.k_gens) {
      std::vector<Permutation> gens;
      for (const std::string& expr : split_top_level(one))
        gens.push_back(named_element(G, expr));
      opts.k_candidates.push_back(generate_subgroup(G, gens));
    }
  } else {
    if (G.order() > kRestrictedModeThreshold)
      throw resource_error("group order " + std::to_string(G.order()) +
                           " exceeds the unrestricted enumeration threshold (" +
                           std::to_string(kRestrictedModeThreshold) +
                           "); supply K candidates with --k-gens");
    // the admission decision above never depends on the cache; a cached
    // lattice only accelerates the same enumeration
    const LatticeCache cache = LatticeCache::from_env();
    if (cache.enabled()) opts.k_candidates = cache.subgroups(G, canonical);
  }

  std::vector<HomoclinicTriple> triples = enumerate_triples(G, opts);
  std::optional<std::size_t> class_count;
  if (args.classify_flag) {
    Classification cls = classify(G, std::move(triples), /*require_closed=*/!restricted);
    triples = std::move(cls.triples);
    class_count = cls.classes.size();
  }

  if (args.json_flag) {
    json j;
    j["group_spec"] = canonical;
    j["count"] = triples.size();
    j["class_count"] = class_count ? json(*class_count) : json(nullptr);
    j["triples"] = json::parse(triples_to_json(triples, canonical));
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("group %s (order %d): %zu valid triple%s%s\n", canonical.c_str(), G.order(),
                triples.size(), triples.size() == 1 ? "" : "s",
                restricted ? " (restricted to the given K candidates)" : "");
    if (class_count)
      std::printf("%zu equivalence class%s\n", *class_count, *class_count == 1 ? "" : "es");
    if (!triples.empty()) print_triple_table(triples, args.classify_flag);
  }
  return kExitOk;
}

// --- verify-tables ----------------------------------------------------------------

int cmd_verify_tables(bool json_flag) {
  const std::vector<TableVerdict> verdicts = verify_reference_tables();
  if (json_flag) {
    json arr = json::array();
    for (const TableVerdict& v : verdicts)
      arr.push_back({{"name", v.name}, {"passed", v.passed}, {"failures", v.failures}});
    json j;
    j["tables"] = std::move(arr);
    j["all_passed"] = all_passed(verdicts);
    std::printf("%s\n", j.dump().c_str());
  } else {
    for (const TableVerdict& v : verdicts) {
      std::printf("%s %s\n", v.passed ? "PASS" : "FAIL", v.name.c_str());
      for (const std::string& f : v.failures) std::printf("      %s\n", f.c_str());
    }
  }
  return all_passed(verdicts) ? kExitOk : kExitMismatch;
}

// --- d4n ----------------------------------------------------------------------------

int cmd_d4n(int n, bool compare, bool json_flag) {
  const std::vector<std::array<int, 3>> tuples = d4n_enumerate(n);
  std::optional<bool> match;
  if (compare) match = (d4n_bruteforce_tuples(n) == tuples);

  if (json_flag) {
    json j;
    j["n"] = n;
    j["group_order"] = 8 * n;
    json arr = json::array();
    for (const std::array<int, 3>& t : tuples) arr.push_back({t[0], t[1], t[2]});
    j["tuples"] = std::move(arr);
    j["bruteforce_match"] = match ? json(*match) : json(nullptr);
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("dihedral group of order %d: %zu triple famil%s (D_q, rho^r, D_p)\n", 8 * n,
                tuples.size(), tuples.size() == 1 ? "y" : "ies");
    for (const std::array<int, 3>& t : tuples)
      std::printf("  q = %d, r = %d, p = %d\n", t[0], t[1], t[2]);
    if (match)
      std::printf("brute-force enumeration: %s\n",
                  *match ? "equal" : "MISMATCH against the closed form");
  }
  return (match && !*match) ? kExitMismatch : kExitOk;
}

// --- dynamics gh -----------------------------------------------------------------------

struct GhArgs {
  double lambda = 1.0, b = 0.1, c = -3.0;
  std::string x0 = "1,1e-6,1e-6";
  double dt = 1e-3, t_max = 300.0;
  double eps = 1e-3, tol = 1e-6;
  bool json_flag = false;
  std::string csv_path;
};

int cmd_dynamics_gh(const GhArgs& args) {
  const GHParams params{args.lambda, args.b, args.c};
  const std::vector<double> x0v = parse_doubles(args.x0, 3, "--x0");
  const Vec3 x0{x0v[0], x0v[1], x0v[2]};

  const Trajectory traj = integrate(params, x0, args.dt, args.t_max);
  const CycleReport report = detect_cycle(traj, gh_equilibria(params), args.eps);

  const Group G = build_group("Z2 wr Z3");
  std::optional<HomoclinicTriple> extracted;
  std::string extraction_note;
  if (report.status == "ok") {
    try {
      extracted = extract_triple(report, G, traj, args.tol);
    } catch (const domain_error& e) {
      extraction_note = e.what();
    }
  } else {
    extraction_note = "status " + report.status;
  }

  if (!args.csv_path.empty()) {
    std::ofstream out(args.csv_path, std::ios::binary | std::ios::trunc);
    out << trajectory_to_csv(traj);
    if (!out.good()) throw domain_error("could not write CSV to " + args.csv_path);
  }

  if (args.json_flag) {
    std::printf("%s\n", cycle_report_to_json(report, extracted, "Z2 wr Z3").c_str());
    return kExitOk;
  }

  std::printf("lambda = %g, b = %g, c = %g, dt = %g, t_max = %g, eps = %g\n", args.lambda,
              args.b, args.c, args.dt, args.t_max, args.eps);
  if (traj.truncated) std::printf("integration truncated: %s\n", traj.truncation_reason.c_str());
  std::printf("status: %s, bounded: %s, approaches cycle: %s\n", report.status.c_str(),
              report.bounded ? "yes" : "no", report.approaches_cycle ? "yes" : "no");
  std::printf("%-8s | %10s | %10s | %10s | %12s | %s\n", "visit", "enter", "exit", "dwell",
              "min dist", "complete");
  for (const Visit& v : report.visits)
    std::printf("%-8s | %10.3f | %10.3f | %10.3f | %12.3e | %s\n", v.label.c_str(),
                v.enter_time, v.exit_time, v.dwell, v.min_distance,
                v.complete ? "yes" : "no");
  if (extracted) {
    std::printf("extracted triple (last complete connection):\n");
    std::printf("  K = < %s >, g = %s, H = < %s >, local: %s, multiplicity %d\n",
                generator_list(extracted->K).c_str(),
                G.element(extracted->g).cycle_string().c_str(),
                generator_list(extracted->H).c_str(), extracted->flags.htl ? "yes" : "no",
                connection_multiplicity(*extracted));
  } else {
    std::printf("extracted triple: none (%s)\n", extraction_note.c_str());
  }
  if (!args.csv_path.empty()) std::printf("trajectory written to %s\n", args.csv_path.c_str());
  return kExitOk;
}

// --- rep d8 -------------------------------------------------------------------------------

int cmd_rep_d8(const std::string& mult_text, bool json_flag) {
  const std::vector<std::string> parts = split_top_level(mult_text);
  if (parts.size() != kD8IrrepNames.size())
    throw domain_error("--mult: expected " + std::to_string(kD8IrrepNames.size()) +
                       " comma-separated multiplicities");
  std::array<int, 7> values{};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      std::size_t used = 0;
      values[i] = std::stoi(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw domain_error("--mult: '" + parts[i] + "' is not an integer");
    }
    if (values[i] < 0) throw domain_error("--mult: multiplicities must be non-negative");
  }
  const IsotypicMultiplicities m = IsotypicMultiplicities::from_array(values);
  const D8CriterionVerdict verdict = d8_rht_criterion(m);

  if (json_flag) {
    json j;
    j["isotropy_K"] = verdict.isotropy_K;
    j["isotropy_H"] = verdict.isotropy_H;
    j["open_set_exists"] = verdict.open_set_exists;
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("multiplicities:");
    for (std::size_t i = 0; i < kD8IrrepNames.size(); ++i)
      std::printf(" %s=%d", kD8IrrepNames[i].c_str(), values[i]);
    std::printf("\n");
    std::printf("endpoint isotropy realizable:   %s\n", verdict.isotropy_H ? "yes" : "no");
    std::printf("connection isotropy realizable: %s\n", verdict.isotropy_K ? "yes" : "no");
    std::printf("open set of realizing fields:   %s\n",
                verdict.open_set_exists ? "yes" : "no");
  }
  return kExitOk;
}

// --- robust ----------------------------------------------------------------------------------

int cmd_robust(const std::string& spec_text, bool json_flag) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const std::string canonical = spec.to_string();
  const Group G = build_group(spec);
  const RobustnessReport report = robustness_report(G);

  if (json_flag) {
    json j;
    j["group_spec"] = canonical;
    j["robust"] = report.robust;
    j["ambient_real_dimension"] = report.ambient_real_dimension;
    j["witness"] = report.witness
                       ? json::parse(triple_to_json(*report.witness, canonical))
                       : json(nullptr);
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("group %s (order %d): %s\n", canonical.c_str(), G.order(),
                report.robust ? "admits a robust connection cycle" : "not robust");
    std::printf("ambient real dimension: %d\n", report.ambient_real_dimension);
    if (report.witness)
      std::printf("witness: K = < %s >, g = %s, H = < %s >\n",
                  generator_list(report.witness->K).c_str(),
                  G.element(report.witness->g).cycle_string().c_str(),
                  generator_list(report.witness->H).c_str());
  }
  return kExitOk;
}

// --- subgroups ----------------------------------------------------------------------------------

int cmd_subgroups(const std::string& spec_text, bool json_flag) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const std::string canonical = spec.to_string();
  const Group G = build_group(spec);
  const LatticeCache cache = LatticeCache::from_env();
  const std::vector<Subgroup> subs = cache.subgroups(G, canonical);

  if (json_flag) {
    json arr = json::array();
    for (const Subgroup& S : subs) {
      json gens = json::array();
      for (ElementIndex g : canonical_generators(S))
        gens.push_back(G.element(g).cycle_string());
      arr.push_back({{"order", S.order()}, {"generators", std::move(gens)}});
    }
    json j;
    j["group_spec"] = canonical;
    j["order"] = G.order();
    j["degree"] = G.degree();
    j["count"] = subs.size();
    j["subgroups"] = std::move(arr);
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("group %s: order %d, degree %d, %zu subgroups\n", canonical.c_str(),
                G.order(), G.degree(), subs.size());
    for (const Subgroup& S : subs)
      std::printf("  order %3d: < %s >\n", S.order(), generator_list(S).c_str());
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"homoclinic triples in finite permutation groups"};
  app.require_subcommand(1);

  TriplesArgs triples_args;
  CLI::App* triples_cmd =
      app.add_subcommand("triples", "enumerate the valid triples of a group");
  triples_cmd->add_option("spec", triples_args.spec, "group spec, e.g. D8 or 'Z2 wr S3'")
      ->required();
  triples_cmd->add_flag("--minimal", triples_args.minimal,
                        "only triples whose H is the closure of K and its conjugate");
  triples_cmd->add_flag("--classify", triples_args.classify_flag,
                        "group the triples into equivalence classes");
  triples_cmd->add_flag("--json", triples_args.json_flag, "emit JSON");
  triples_cmd
      ->add_option("--k-gens", triples_args.k_gens,
                   "restrict K to the subgroup generated by these comma-separated "
                   "elements (repeatable)")
      ->take_all();

  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-tables", "check the built-in classification tables against enumeration");
  verify_cmd->alias("verify-paper-tables");
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  int d4n_n = 0;
  bool d4n_compare = false, d4n_json = false;
  CLI::App* d4n_cmd = app.add_subcommand(
      "d4n", "closed-form triple families of the dihedral group of order 8n");
  d4n_cmd->add_option("n", d4n_n, "the parameter n >= 1")->required();
  d4n_cmd->add_flag("--compare-bruteforce", d4n_compare,
                    "cross-check against full enumeration and classification");
  d4n_cmd->add_flag("--json", d4n_json, "emit JSON");

  GhArgs gh_args;
  CLI::App* dynamics_cmd = app.add_subcommand("dynamics", "numerical connection cycles");
  dynamics_cmd->require_subcommand(1);
  CLI::App* gh_cmd = dynamics_cmd->add_subcommand(
      "gh", "integrate the three-cell cubic system and extract its triple");
  gh_cmd->add_option("--lambda", gh_args.lambda, "linear growth rate (default 1)");
  gh_cmd->add_option("--b", gh_args.b, "forward coupling (default 0.1)");
  gh_cmd->add_option("--c", gh_args.c, "backward coupling (default -3)");
  gh_cmd->add_option("--x0", gh_args.x0, "initial state a,b,c (default 1,1e-6,1e-6)");
  gh_cmd->add_option("--dt", gh_args.dt, "integration step (default 1e-3)");
  gh_cmd->add_option("--t-max", gh_args.t_max, "integration horizon (default 300)");
  gh_cmd->add_option("--eps", gh_args.eps, "visit-ball radius (default 1e-3)");
  gh_cmd->add_option("--tol", gh_args.tol, "symmetry-detection tolerance (default 1e-6)");
  gh_cmd->add_flag("--json", gh_args.json_flag, "emit JSON");
  gh_cmd->add_option("--csv", gh_args.csv_path, "write the trajectory as CSV to this file");

  std::string rep_mult;
  bool rep_json = false;
  CLI::App* rep_cmd = app.add_subcommand("rep", "character-theoretic side conditions");
  rep_cmd->require_subcommand(1);
  CLI::App* rep_d8_cmd = rep_cmd->add_subcommand(
      "d8", "openness criterion for the order-16 dihedral group");
  rep_d8_cmd
      ->add_option("--mult", rep_mult,
                   "isotypic multiplicities a0,a1,a2,a3,e1,e2,f of the representation")
      ->required();
  rep_d8_cmd->add_flag("--json", rep_json, "emit JSON");

  std::string robust_spec;
  bool robust_json = false;
  CLI::App* robust_cmd =
      app.add_subcommand("robust", "does the group admit a robust connection cycle?");
  robust_cmd->add_option("spec", robust_spec, "group spec")->required();
  robust_cmd->add_flag("--json", robust_json, "emit JSON");

  std::string subgroups_spec;
  bool subgroups_json = false;
  CLI::App* subgroups_cmd =
      app.add_subcommand("subgroups", "list the full subgroup lattice");
  subgroups_cmd->add_option("spec", subgroups_spec, "group spec")->required();
  subgroups_cmd->add_flag("--json", subgroups_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(triples_cmd)) return cmd_triples(triples_args);
    if (app.got_subcommand(verify_cmd)) return cmd_verify_tables(verify_json);
    if (app.got_subcommand(d4n_cmd)) {
      if (d4n_n < 1) throw domain_error("n must be >= 1");
      return cmd_d4n(d4n_n, d4n_compare, d4n_json);
    }
    if (app.got_subcommand(dynamics_cmd)) return cmd_dynamics_gh(gh_args);
    if (app.got_subcommand(rep_cmd)) return cmd_rep_d8(rep_mult, rep_json);
    if (app.got_subcommand(robust_cmd)) return cmd_robust(robust_spec, robust_json);
    if (app.got_subcommand(subgroups_cmd)) return cmd_subgroups(subgroups_spec, subgroups_json);
    return kExitUsage;
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const resource_error& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return kExitResource;
  } catch (const internal_error& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
