#include "eqtriples/serialization.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "eqtriples/cache.hpp"
#include "eqtriples/catalog.hpp"
#include "eqtriples/dynamics.hpp"
#include "eqtriples/error.hpp"
#include "json.hpp"

using namespace eqtriples;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

Subgroup sub(const Group& G, const std::vector<std::string>& exprs) {
  std::vector<Permutation> gens;
  for (const std::string& e : exprs) gens.push_back(named_element(G, e));
  return generate_subgroup(G, gens);
}

HomoclinicTriple d4_row1(const Group& G) {
  return make_triple(G, sub(G, {"kappa"}), G.index_of(named_element(G, "rho")),
                     sub(G, {"kappa", "rho^2"}));
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("eqtriples-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

} // namespace

TEST_CASE("canonical generators") {
  const Group G = build_group("D4");
  CHECK(canonical_generators(trivial_subgroup(G)).empty());
  const Subgroup H = sub(G, {"kappa", "rho^2"});
  const std::vector<ElementIndex> gens = canonical_generators(H);
  CHECK(gens.size() == 2);
  CHECK(generate_subgroup(G, gens).members() == H.members());
  // single-generator subgroup round-trips to its one non-identity element
  const Subgroup K = sub(G, {"kappa"});
  CHECK(canonical_generators(K) ==
        std::vector<ElementIndex>{G.index_of(named_element(G, "kappa"))});
}

TEST_CASE("triple JSON layout and round trip") {
  const Group G = build_group("D4");
  HomoclinicTriple t = d4_row1(G);
  t.class_id = 7;
  const std::string text = triple_to_json(t, "D4");

  const json j = json::parse(text);
  CHECK(j["group_spec"] == "D4");
  CHECK(j["K_generators"] == json::array({"(2 4)"}));
  CHECK(j["g"] == "(1 2 3 4)");
  CHECK(j["H_generators"].size() == 2);
  CHECK(j["flags"]["ht1"] == true);
  CHECK(j["flags"]["ht2"] == true);
  CHECK(j["flags"]["htl"] == true);
  CHECK(j["minimal"] == true);
  CHECK(j["multiplicity"] == 2);
  CHECK(j["class_id"] == 7);

  const OwnedTriple back = triple_from_json(text);
  CHECK(back.triple.K.members() == t.K.members());
  CHECK(back.triple.H.members() == t.H.members());
  CHECK(back.triple.g == t.g);
  CHECK(back.triple.class_id == 7);
  CHECK(back.triple.minimal);
  // emit(parse(emit(x))) is byte-identical
  CHECK(triple_to_json(back.triple, "D4") == text);
}

TEST_CASE("triple JSON rejects inconsistent payloads") {
  const Group G = build_group("D4");
  const std::string text = triple_to_json(d4_row1(G), "D4");

  json j = json::parse(text);
  j["flags"]["ht1"] = false;
  CHECK_THROWS_AS((void)triple_from_json(j.dump()), domain_error);

  j = json::parse(text);
  j["minimal"] = false;
  CHECK_THROWS_AS((void)triple_from_json(j.dump()), domain_error);

  j = json::parse(text);
  j["multiplicity"] = 3;
  CHECK_THROWS_AS((void)triple_from_json(j.dump()), domain_error);

  j = json::parse(text);
  j["g"] = "(1 2)";  // not an element of D4
  CHECK_THROWS_AS((void)triple_from_json(j.dump()), domain_error);

  j = json::parse(text);
  j.erase("flags");
  CHECK_THROWS_AS((void)triple_from_json(j.dump()), domain_error);

  CHECK_THROWS_AS((void)triple_from_json("{invalid"), parse_error);
}

TEST_CASE("triple JSON keeps invalid candidates honest") {
  const Group G = build_group("D4");
  // twist inside the normalizer: condition 1 fails, round trip must agree
  const HomoclinicTriple bad =
      make_triple(G, sub(G, {"kappa"}), G.index_of(named_element(G, "rho^2")),
                  sub(G, {"kappa", "rho^2"}));
  CHECK_FALSE(bad.valid());
  const std::string text = triple_to_json(bad, "D4");
  const OwnedTriple back = triple_from_json(text);
  CHECK_FALSE(back.triple.flags.ht1);
  CHECK(json::parse(text)["class_id"].is_null());
}

TEST_CASE("cycle report JSON round trip") {
  const GHParams p{};
  const Trajectory traj = integrate(p, {1, 0, 0}, 1e-3, 1.0);
  const CycleReport rep = detect_cycle(traj, gh_equilibria(p), 1e-3);
  REQUIRE(rep.visits.size() == 1);

  SUBCASE("without an extracted triple") {
    const std::string text = cycle_report_to_json(rep, std::nullopt, "Z2 wr Z3");
    const json j = json::parse(text);
    CHECK(j["status"] == "no_cycle");
    CHECK(j["visit_sequence"] == json::array({"+x1"}));
    CHECK(j["extracted"].is_null());

    const ParsedCycleReport back = cycle_report_from_json(text);
    CHECK(back.status == rep.status);
    CHECK(back.eps == rep.eps);
    CHECK(back.visit_sequence == std::vector<std::string>{"+x1"});
    CHECK(back.dwell_times.size() == 1);
    CHECK(back.dwell_times[0] == rep.visits[0].dwell);
    CHECK(back.min_distances[0] == rep.visits[0].min_distance);
    CHECK(back.complete == std::vector<bool>{false});
    CHECK(back.bounded == rep.bounded);
    CHECK(back.approaches_cycle == rep.approaches_cycle);
    CHECK(back.max_norm_squared == rep.max_norm_squared);
    CHECK_FALSE(back.extracted.has_value());
  }

  SUBCASE("with an extracted triple") {
    const Group G = build_group("Z2 wr Z3");
    const HomoclinicTriple t =
        make_triple(G, sub(G, {"kappa_1"}), G.index_of(named_element(G, "rho")),
                    sub(G, {"kappa_1", "kappa_2"}));
    const std::string text = cycle_report_to_json(rep, t, "Z2 wr Z3");
    const ParsedCycleReport back = cycle_report_from_json(text);
    REQUIRE(back.extracted.has_value());
    CHECK(back.extracted->triple.K.members() == t.K.members());
    CHECK(back.extracted->triple.valid());
  }

  SUBCASE("mismatched array lengths are rejected") {
    json j = json::parse(cycle_report_to_json(rep, std::nullopt, "Z2 wr Z3"));
    j["dwell_times"].push_back(1.0);
    CHECK_THROWS_AS((void)cycle_report_from_json(j.dump()), domain_error);
  }
}

TEST_CASE("subgroup list JSON") {
  const Group G = build_group("D8");
  const std::vector<Subgroup> subs = all_subgroups(G);
  const std::string text = subgroups_to_json(G, "D8", subs);

  SUBCASE("round trip") {
    const std::vector<Subgroup> back = subgroups_from_json(G, "D8", text);
    REQUIRE(back.size() == subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i)
      CHECK(back[i].members() == subs[i].members());
  }
  SUBCASE("schema / spec / shape checks") {
    json j = json::parse(text);
    j["schema"] = kSubgroupSchemaVersion + 1;
    CHECK_THROWS_AS((void)subgroups_from_json(G, "D8", j.dump()), domain_error);

    CHECK_THROWS_AS((void)subgroups_from_json(G, "D16", text), domain_error);

    const Group H = build_group("D4");
    CHECK_THROWS_AS((void)subgroups_from_json(H, "D8", text), domain_error);
  }
  SUBCASE("closure violations are rejected") {
    json j = json::parse(text);
    // drop one element from the largest subgroup: no longer closed
    j["subgroups"].back().erase(1);
    CHECK_THROWS_AS((void)subgroups_from_json(G, "D8", j.dump()), domain_error);

    j = json::parse(text);
    j["subgroups"][0] = json::array({5});  // does not contain the identity
    CHECK_THROWS_AS((void)subgroups_from_json(G, "D8", j.dump()), domain_error);

    j = json::parse(text);
    j["subgroups"][0] = json::array({0, 99});  // out of range
    CHECK_THROWS_AS((void)subgroups_from_json(G, "D8", j.dump()), domain_error);

    CHECK_THROWS_AS((void)subgroups_from_json(G, "D8", "not json"), parse_error);
  }
}

TEST_CASE("trajectory CSV") {
  const Trajectory traj = integrate(GHParams{}, {0.3, 0.0, 0.7}, 0.25, 0.5);
  const std::string csv = trajectory_to_csv(traj);
  REQUIRE(csv.rfind("t,x1,x2,x3\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 samples
  double t, x1, x2, x3;
  const char* second_row = csv.c_str() + csv.find('\n') + 1;
  REQUIRE(std::sscanf(second_row, "%lf,%lf,%lf,%lf", &t, &x1, &x2, &x3) == 4);
  CHECK(t == 0.0);
  CHECK(x1 == 0.3);
  CHECK(x2 == 0.0);
  CHECK(x3 == 0.7);
}

TEST_CASE("lattice cache") {
  const Group G = build_group("D8");
  const std::vector<Subgroup> expected = all_subgroups(G);

  SUBCASE("disabled cache computes directly") {
    const LatticeCache off(std::nullopt);
    CHECK_FALSE(off.enabled());
    const std::vector<Subgroup> got = off.subgroups(G, "D8");
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got[i].members() == expected[i].members());
  }

  SUBCASE("store, hit, and verified reload") {
    TempDir dir;
    const LatticeCache cache(dir.path);
    const fs::path entry = cache.entry_path("D8", G.degree(), G.order());
    CHECK_FALSE(fs::exists(entry));

    const std::vector<Subgroup> first = cache.subgroups(G, "D8");
    CHECK(fs::exists(entry));
    const std::vector<Subgroup> second = cache.subgroups(G, "D8");
    REQUIRE(first.size() == expected.size());
    REQUIRE(second.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(first[i].members() == expected[i].members());
      CHECK(second[i].members() == expected[i].members());
    }
  }

  SUBCASE("corrupt entries are recomputed and replaced") {
    TempDir dir;
    const LatticeCache cache(dir.path);
    const fs::path entry = cache.entry_path("D8", G.degree(), G.order());

    for (const char* payload : {"garbage bytes", "{\"schema\": 1, \"subgroups\": []}"}) {
      {
        std::ofstream out(entry, std::ios::trunc);
        out << payload;
      }
      const std::vector<Subgroup> got = cache.subgroups(G, "D8");
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i].members() == expected[i].members());
      // the bad entry was overwritten with a loadable one
      std::ifstream in(entry);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      CHECK(subgroups_from_json(G, "D8", text).size() == expected.size());
    }
  }

  SUBCASE("entry paths are deterministic and spec-distinct") {
    const LatticeCache cache(fs::path("/nowhere"));
    CHECK(cache.entry_path("D8", 8, 16) == cache.entry_path("D8", 8, 16));
    CHECK(cache.entry_path("D8", 8, 16) != cache.entry_path("D4", 4, 8));
    CHECK(cache.entry_path("D8", 8, 16).extension() == ".json");
  }

  SUBCASE("environment wiring") {
    TempDir dir;
    ::setenv("EQTRIPLES_CACHE", dir.path.c_str(), 1);
    CHECK(LatticeCache::from_env().enabled());
    ::setenv("EQTRIPLES_CACHE", "", 1);
    CHECK_FALSE(LatticeCache::from_env().enabled());
    ::unsetenv("EQTRIPLES_CACHE");
    CHECK_FALSE(LatticeCache::from_env().enabled());
  }
}

TEST_CASE("fnv1a64 matches the reference constants") {
  // published test vectors for 64-bit FNV-1a
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}
