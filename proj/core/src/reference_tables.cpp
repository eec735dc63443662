#include "eqtriples/reference_tables.hpp"

#include <algorithm>

#include "eqtriples/catalog.hpp"
#include "eqtriples/error.hpp"

namespace eqtriples {

std::vector<TableExpectation> reference_tables() {
  std::vector<TableExpectation> tables;

  tables.push_back({"D4",
                    "D4",
                    {
                        {{"kappa"}, "rho", {"kappa", "rho^2"}, true},
                        {{"kappa*rho"}, "rho", {"kappa*rho", "rho^2"}, true},
                    },
                    /*exhaustive=*/true,
                    /*total_class_count=*/2,
                    /*validate_only=*/false});

  tables.push_back({"D8",
                    "D8",
                    {
                        {{"kappa"}, "rho", {"kappa", "rho^2"}, false},
                        {{"kappa*rho"}, "rho", {"kappa*rho", "rho^2"}, false},
                        {{"kappa"}, "rho^2", {"kappa", "rho^4"}, true},
                        {{"kappa*rho"}, "rho^2", {"kappa*rho", "rho^4"}, true},
                        {{"kappa", "rho^4"}, "rho", {"kappa", "rho^2"}, true},
                        {{"kappa*rho", "rho^4"}, "rho", {"kappa*rho", "rho^2"}, true},
                    },
                    true,
                    6,
                    false});

  tables.push_back({"S4",
                    "S4",
                    {
                        {{"(1 2)"}, "(1 3)(2 4)", {"(1 2)", "(3 4)"}, true},
                        {{"(1 2)(3 4)"}, "(1 3)", {"(1 2)(3 4)", "(1 4)(2 3)"}, true},
                    },
                    true,
                    2,
                    false});

  tables.push_back(
      {"S6",
       "S6",
       {
           {{"(1 2)"}, "(1 3)(2 4)", {"(1 2)", "(3 4)"}, true},
           {{"(1 2)(3 4)"}, "(1 3)", {"(1 2)(3 4)", "(1 3)(2 4)"}, true},
           {{"(1 2)(3 4)"}, "(1 5)(2 6 3)", {"(1 2)(3 4)", "(2 4)(5 6)"}, false},
           {{"(1 2)", "(3 4)"}, "(1 5)(2 6)", {"(1 2)", "(3 4)", "(5 6)"}, true},
           {{"(1 2)", "(3 4)"}, "(1 3 5)(2 6)", {"(1 2)", "(3 4)", "(3 5)", "(3 6)"}, false},
           {{"(1 2 3)"}, "(1 4)(2 5)(3 6)", {"(1 2 3)", "(4 5 6)"}, true},
           {{"(1 2 3 4 5 6)"}, "(2 4)", {"(1 2 3 4 5 6)", "(1 2 3 6 5 4)"}, false},
           {{"(1 6)(2 5)(3 4)", "(1 2 3 4 5 6)"},
            "(2 4)",
            {"(1 2 3 4 5 6)", "(1 2 3 6 5 4)"},
            false},
           {{"(1 2 3)", "(4 5)"}, "(1 4)(2 5 3 6)", {"(1 2)", "(1 3)", "(4 5)", "(4 6)"}, false},
           {{"(1 2)", "(1 3)"}, "(1 4)(2 5)(3 6)", {"(1 2)", "(1 3)", "(4 5)", "(4 6)"}, true},
       },
       false,
       std::nullopt,
       /*validate_only=*/true});

  tables.push_back({"Z2 wr Z3",
                    "Z2 wr Z3",
                    {
                        {{"kappa_1"}, "rho", {"kappa_1", "kappa_2"}, true},
                        {{"kappa_1*kappa_2"},
                         "rho",
                         {"kappa_1*kappa_2", "kappa_1*kappa_3"},
                         true},
                        {{"kappa_1", "kappa_2"}, "rho", {"kappa_1", "kappa_2", "kappa_3"}, true},
                        {{"kappa_1", "kappa_2*kappa_3"},
                         "rho",
                         {"kappa_1", "kappa_2", "kappa_3"},
                         true},
                    },
                    true,
                    4,
                    false});

  tables.push_back({"Z2 wr S3",
                    "Z2 wr S3",
                    {
                        {{"kappa_1"}, "sigma", {"kappa_1", "kappa_2"}, true},
                        {{"kappa_1*kappa_3"},
                         "sigma",
                         {"kappa_1*kappa_2", "kappa_1*kappa_3"},
                         true},
                        {{"sigma"}, "kappa_1", {"sigma", "kappa_1*kappa_2"}, true},
                        {{"sigma*kappa_3"},
                         "kappa_1",
                         {"sigma*kappa_3", "kappa_1*kappa_2*sigma*kappa_3"},
                         true},
                        {{"sigma", "kappa_3"},
                         "kappa_1",
                         {"sigma", "kappa_1*kappa_2", "kappa_3"},
                         true},
                        {{"kappa_1", "kappa_2"}, "rho", {"kappa_1", "kappa_2", "kappa_3"}, true},
                    },
                    /*exhaustive=*/false,  // the list is known to be incomplete
                    /*total_class_count=*/8,
                    false});

  return tables;
}

namespace {

Subgroup subgroup_from_expressions(const Group& G, const std::vector<std::string>& exprs) {
  std::vector<Permutation> gens;
  gens.reserve(exprs.size());
  for (const std::string& e : exprs) gens.push_back(named_element(G, e));
  return generate_subgroup(G, gens);
}

bool same_triple(const HomoclinicTriple& a, const HomoclinicTriple& b) {
  return a.K.members() == b.K.members() && a.g == b.g && a.H.members() == b.H.members();
}

} // namespace

TableVerdict verify_table(const TableExpectation& table) {
  TableVerdict verdict{table.name, false, {}};
  const Group G = build_group(table.group_spec);

  std::vector<HomoclinicTriple> row_triples;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const TableRow& row = table.rows[i];
    const std::string where = "row " + std::to_string(i + 1);
    try {
      HomoclinicTriple t =
          make_triple(G, subgroup_from_expressions(G, row.k_generators),
                      G.index_of(named_element(G, row.twist)),
                      subgroup_from_expressions(G, row.h_generators));
      if (!t.flags.ht1) verdict.failures.push_back(where + ": condition 1 fails");
      if (!t.flags.ht2) verdict.failures.push_back(where + ": condition 2 fails");
      if (t.flags.htl != row.local)
        verdict.failures.push_back(where + ": normality column mismatch (computed " +
                                   (t.flags.htl ? "yes" : "no") + ", table says " +
                                   (row.local ? "yes" : "no") + ")");
      row_triples.push_back(std::move(t));
    } catch (const error& e) {
      verdict.failures.push_back(where + ": " + e.what());
    }
  }

  if (!table.validate_only && verdict.failures.empty()) {
    EnumerationOptions opts;
    opts.minimal_only = true;
    Classification cls = classify(G, enumerate_triples(G, opts));

    if (table.total_class_count && static_cast<int>(cls.classes.size()) !=
                                       *table.total_class_count)
      verdict.failures.push_back("expected " + std::to_string(*table.total_class_count) +
                                 " equivalence classes, enumeration found " +
                                 std::to_string(cls.classes.size()));

    // locate each row among the enumerated minimal triples and read off its class
    std::vector<int> row_class(table.rows.size(), -1);
    for (std::size_t i = 0; i < row_triples.size(); ++i) {
      const HomoclinicTriple normalized = normalize_twist(row_triples[i]);
      for (const HomoclinicTriple& t : cls.triples) {
        if (same_triple(normalized, t)) {
          row_class[i] = t.class_id.value_or(-1);
          break;
        }
      }
      if (row_class[i] < 0)
        verdict.failures.push_back("row " + std::to_string(i + 1) +
                                   ": not among the enumerated minimal triples");
    }

    for (std::size_t i = 0; i < row_class.size(); ++i)
      for (std::size_t j = i + 1; j < row_class.size(); ++j)
        if (row_class[i] >= 0 && row_class[i] == row_class[j])
          verdict.failures.push_back("rows " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) +
                                     " fall in the same equivalence class");

    if (table.exhaustive) {
      for (const EquivalenceClass& c : cls.classes) {
        if (std::find(row_class.begin(), row_class.end(), c.id) == row_class.end())
          verdict.failures.push_back("equivalence class " + std::to_string(c.id) +
                                     " has no table row");
      }
    }
  }

  verdict.passed = verdict.failures.empty();
  return verdict;
}

std::vector<TableVerdict> verify_reference_tables() {
  std::vector<TableVerdict> out;
  for (const TableExpectation& table : reference_tables()) out.push_back(verify_table(table));

  TableVerdict negatives{"triple-free groups", false, {}};
  const std::vector<std::string> empty_specs = {
      "S3",  "Q8",  "C1",  "C2",  "C3",  "C4",  "C5",       "C6",      "C7",  "C8",
      "C9",  "C10", "C11", "C12", "C2 x C2", "C2 x C4", "D3",  "D5",
      "D6",  "D7",  "D9",  "D10", "D14", "D18"};
  for (const std::string& spec : empty_specs)
    if (has_triples(build_group(spec)))
      negatives.failures.push_back(spec + ": unexpected triple found");
  negatives.passed = negatives.failures.empty();
  out.push_back(std::move(negatives));

  TableVerdict positives{"dihedral positives", false, {}};
  for (const std::string& spec : {"D4", "D8", "D12", "D16", "D20"})
    if (!has_triples(build_group(spec)))
      positives.failures.push_back(spec + ": no triple found");
  positives.passed = positives.failures.empty();
  out.push_back(std::move(positives));

  return out;
}

bool all_passed(const std::vector<TableVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const TableVerdict& v) { return v.passed; });
}

} // namespace eqtriples
