#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"

namespace lsa::catalog {

/// Stored invariant triple (sdim L/Z(L), generator pair of L/Z(L), sdim L^2).
struct TableRow {
  SuperDim sdim_mod_center;
  SuperDim generator_pair;
  SuperDim sdim_derived;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct CatalogEntry {
  std::string name;  // e.g. "(3|2)_13"
  LieSuperalgebra algebra;
  TableRow table_row;
};

/// Stem nilpotent superalgebras of total dimension at most 5 with
/// dim L^2 >= 2, in presentation order.
const std::vector<CatalogEntry>& entries();
std::vector<std::string> list();

/// Throws std::out_of_range for unknown names.
const CatalogEntry& get(std::string_view name);

/// Recomputes the triple from the structure constants.
TableRow compute_row(const LieSuperalgebra& L);

struct Table1Result {
  std::string name;
  TableRow stored;
  TableRow computed;
  bool matches = false;
  std::string error;  // set when the triple could not be computed
};

struct Table1Report {
  std::vector<Table1Result> results;
  bool ok() const;
};

/// Entries are verified concurrently; results keep catalog order.
Table1Report verify_table1();

struct ClassificationCheck {
  std::string subject;  // algebra checked
  SuperDim expected;    // st value it must have, when `listed`
  SuperDim computed;
  bool listed = true;   // false: catalog entry outside every family list
  bool passed = false;
  std::string note;
};

struct ClassificationReport {
  std::vector<ClassificationCheck> checks;
  bool ok() const;
};

/// For each family of the st classification, builds representatives with
/// abelian paddings (a|b), 0 <= a, b <= 2, and checks their st. Catalog
/// entries that are not listed in any family must have an st outside the
/// classified set.
ClassificationReport verify_classification();

}  // namespace lsa::catalog
