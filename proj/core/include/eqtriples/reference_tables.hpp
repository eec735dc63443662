#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqtriples/triples.hpp"

namespace eqtriples {

// One row of a published classification table.  Generator and twist
// expressions are evaluated against the group's named-element registry and
// cycle parser (see named_element).
struct TableRow {
  std::vector<std::string> k_generators;
  std::string twist;
  std::vector<std::string> h_generators;
  bool local = false;  // the "K normal in H and H^g" column
};

struct TableExpectation {
  std::string name;
  std::string group_spec;
  std::vector<TableRow> rows;
  // Rows form a complete set of representatives of the minimal-triple
  // classification (checked by full enumeration when set).
  bool exhaustive = false;
  // Frozen size of the full minimal classification; checked whenever the
  // group is small enough to enumerate.  Equals rows.size() for exhaustive
  // tables; may exceed it otherwise.
  std::optional<int> total_class_count;
  // Group too large for full enumeration: check the rows only.
  bool validate_only = false;
};

struct TableVerdict {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;  // human-readable, empty on pass
};

// The built-in expectations, in fixed order:
// D4, D8, S4, S6 (validate-only), Z2 wr Z3, Z2 wr S3.
std::vector<TableExpectation> reference_tables();

// Check one table: every row must be a valid triple whose locality flag
// matches the table column; unless validate_only, the rows must land in
// pairwise distinct equivalence classes of the full minimal classification,
// whose size must equal total_class_count; exhaustive tables must cover
// every class.
TableVerdict verify_table(const TableExpectation& table);

// All built-in tables plus two existence sweeps:
//  * "triple-free groups": S3, Q8, C1..C12, C2 x C2, C2 x C4, and
//    D n for n in {3,5,6,7,9,10,14,18} admit no triple at all;
//  * "dihedral positives": D n for n in {4,8,12,16,20} admit triples.
std::vector<TableVerdict> verify_reference_tables();

bool all_passed(const std::vector<TableVerdict>& verdicts);

} // namespace eqtriples
