#include "lsa/catalog.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace lsa::catalog {

namespace {

struct Term {
  long coeff;
  const char* basis;
};

struct Relation {
  const char* left;
  const char* right;
  std::vector<Term> value;
};

struct Record {
  const char* name;
  SuperDim sdim;
  std::vector<Relation> relations;
  TableRow row;
};

// Presentations with basis e1..ek (even) and f1..fl (odd); unlisted brackets
// vanish. Rows: (sdim L/Z(L), generator pair of L/Z(L), sdim L^2).
const std::vector<Record>& records() {
  static const std::vector<Record> data = {
      {"(4|0)_2", {4, 0}, {{"e1", "e2", {{1, "e3"}}}, {"e1", "e3", {{1, "e4"}}}}, {{3, 0}, {2, 0}, {2, 0}}},
      {"(2|2)_1", {2, 2}, {{"f1", "f1", {{1, "e1"}}}, {"f2", "f2", {{1, "e2"}}}}, {{0, 2}, {0, 2}, {2, 0}}},
      {"(2|2)_4", {2, 2}, {{"f1", "f2", {{1, "e1"}}}, {"f2", "f2", {{1, "e2"}}}}, {{0, 2}, {0, 2}, {2, 0}}},
      {"(2|2)_6", {2, 2}, {{"e2", "f2", {{1, "f1"}}}, {"f2", "f2", {{1, "e1"}}}}, {{1, 1}, {1, 1}, {1, 1}}},
      {"(1|3)_1", {1, 3}, {{"e1", "f2", {{1, "f1"}}}, {"e1", "f3", {{1, "f2"}}}}, {{1, 2}, {1, 1}, {0, 2}}},
      {"(5|0)_3",
       {5, 0},
       {{"e1", "e2", {{1, "e3"}}}, {"e1", "e3", {{1, "e4"}}}, {"e1", "e4", {{1, "e5"}}}, {"e2", "e3", {{1, "e5"}}}},
       {{4, 0}, {2, 0}, {3, 0}}},
      {"(5|0)_4",
       {5, 0},
       {{"e1", "e2", {{1, "e3"}}}, {"e1", "e3", {{1, "e4"}}}, {"e1", "e4", {{1, "e5"}}}},
       {{4, 0}, {2, 0}, {3, 0}}},
      {"(5|0)_5",
       {5, 0},
       {{"e1", "e2", {{1, "e3"}}}, {"e1", "e4", {{1, "e5"}}}, {"e2", "e3", {{1, "e5"}}}},
       {{4, 0}, {3, 0}, {2, 0}}},
      {"(5|0)_6",
       {5, 0},
       {{"e1", "e2", {{1, "e3"}}}, {"e1", "e3", {{1, "e4"}}}, {"e2", "e3", {{1, "e5"}}}},
       {{3, 0}, {2, 0}, {3, 0}}},
      {"(5|0)_8", {5, 0}, {{"e1", "e2", {{1, "e4"}}}, {"e1", "e3", {{1, "e5"}}}}, {{3, 0}, {3, 0}, {2, 0}}},
      {"(4|1)_4", {4, 1}, {{"e1", "e2", {{1, "e3"}}}, {"f1", "f1", {{1, "e4"}}}}, {{2, 1}, {2, 1}, {2, 0}}},
      {"(4|1)_6",
       {4, 1},
       {{"e1", "e2", {{1, "e3"}}}, {"e1", "e3", {{1, "e4"}}}, {"f1", "f1", {{1, "e4"}}}},
       {{3, 1}, {2, 1}, {2, 0}}},
      {"(1|4)_7",
       {1, 4},
       {{"e1", "f2", {{1, "f1"}}}, {"e1", "f3", {{1, "f2"}}}, {"e1", "f4", {{1, "f3"}}}},
       {{1, 3}, {1, 1}, {0, 3}}},
      {"(1|4)_8", {1, 4}, {{"e1", "f2", {{1, "f1"}}}, {"e1", "f4", {{1, "f3"}}}}, {{1, 2}, {1, 2}, {0, 2}}},
      {"(3|2)_5",
       {3, 2},
       {{"f1", "f1", {{1, "e2"}}}, {"f1", "f2", {{1, "e1"}}}, {"f2", "f2", {{1, "e3"}}}},
       {{0, 2}, {0, 2}, {3, 0}}},
      {"(3|2)_11", {3, 2}, {{"e1", "e2", {{1, "e3"}}}, {"e1", "f2", {{1, "f1"}}}}, {{2, 1}, {2, 1}, {1, 1}}},
      {"(3|2)_12",
       {3, 2},
       {{"e1", "e2", {{1, "e3"}}}, {"e1", "f2", {{1, "f1"}}}, {"f2", "f2", {{1, "e3"}}}},
       {{2, 1}, {2, 1}, {1, 1}}},
      {"(3|2)_13",
       {3, 2},
       {{"e1", "e2", {{1, "e3"}}}, {"e1", "f2", {{1, "f1"}}}, {"f1", "f2", {{1, "e3"}}}, {"f2", "f2", {{2, "e2"}}}},
       {{2, 2}, {1, 1}, {2, 1}}},
      {"(2|3)_5",
       {2, 3},
       {{"f1", "f1", {{1, "e1"}}}, {"f2", "f2", {{1, "e2"}}}, {"f3", "f3", {{1, "e1"}}}},
       {{0, 3}, {0, 3}, {2, 0}}},
      {"(2|3)_6",
       {2, 3},
       {{"f1", "f1", {{1, "e1"}}}, {"f2", "f2", {{1, "e2"}}}, {"f3", "f3", {{1, "e1"}, {1, "e2"}}}},
       {{0, 3}, {0, 3}, {2, 0}}},
      {"(2|3)_8",
       {2, 3},
       {{"f1", "f2", {{1, "e1"}}}, {"f2", "f2", {{2, "e2"}}}, {"f2", "f3", {{1, "e2"}}}},
       {{0, 3}, {0, 3}, {2, 0}}},
      {"(2|3)_9",
       {2, 3},
       {{"f1", "f2", {{1, "e1"}}}, {"f2", "f2", {{2, "e2"}}}, {"f3", "f3", {{1, "e1"}}}},
       {{0, 3}, {0, 3}, {2, 0}}},
      {"(2|3)_10",
       {2, 3},
       {{"f1", "f2", {{1, "e1"}}}, {"f2", "f2", {{2, "e2"}}}, {"f3", "f3", {{1, "e1"}, {1, "e2"}}}},
       {{0, 3}, {0, 3}, {2, 0}}},
      {"(2|3)_11",
       {2, 3},
       {{"f1", "f2", {{1, "e1"}}}, {"f2", "f2", {{2, "e2"}}}, {"f2", "f3", {{1, "e2"}}}, {"f3", "f3", {{1, "e1"}}}},
       {{0, 3}, {0, 3}, {2, 0}}},
      {"(2|3)_13", {2, 3}, {{"e1", "f3", {{1, "f1"}}}, {"f2", "f2", {{1, "e2"}}}}, {{1, 2}, {1, 2}, {1, 1}}},
      {"(2|3)_14", {2, 3}, {{"e1", "f3", {{1, "f1"}}}, {"f2", "f3", {{1, "e2"}}}}, {{1, 2}, {1, 2}, {1, 1}}},
      {"(2|3)_16",
       {2, 3},
       {{"e1", "f3", {{1, "f1"}}}, {"f2", "f2", {{1, "e2"}}}, {"f3", "f3", {{1, "e2"}}}},
       {{1, 2}, {1, 2}, {1, 1}}},
      {"(2|3)_18",
       {2, 3},
       {{"e1", "f3", {{1, "f1"}}}, {"e2", "f2", {{1, "f1"}}}, {"f2", "f3", {{-1, "e1"}}}, {"f3", "f3", {{2, "e2"}}}},
       {{2, 2}, {0, 2}, {2, 1}}},
      {"(2|3)_19", {2, 3}, {{"e1", "f3", {{1, "f1"}}}, {"e2", "f3", {{1, "f2"}}}}, {{2, 1}, {2, 1}, {0, 2}}},
      {"(2|3)_20",
       {2, 3},
       {{"e1", "f2", {{1, "f1"}}}, {"e1", "f3", {{1, "f2"}}}, {"f3", "f3", {{1, "e2"}}}},
       {{1, 2}, {1, 1}, {1, 2}}},
      {"(2|3)_21",
       {2, 3},
       {{"e1", "f2", {{1, "f1"}}}, {"e1", "f3", {{1, "f2"}}}, {"f1", "f3", {{-1, "e2"}}}, {"f2", "f2", {{1, "e2"}}}},
       {{1, 3}, {1, 1}, {1, 2}}},
      {"(2|3)_22",
       {2, 3},
       {{"e1", "f2", {{1, "f1"}}}, {"e1", "f3", {{1, "f2"}}}, {"e2", "f3", {{1, "f1"}}}},
       {{2, 2}, {2, 1}, {0, 2}}},
  };
  return data;
}

LieSuperalgebra build(const Record& rec) {
  LieSuperalgebra L(rec.name, rec.sdim);
  for (const auto& rel : rec.relations) {
    Row value(L.dim());
    for (const auto& term : rel.value) value[*L.index_of(term.basis)] += term.coeff;
    L.set_bracket(*L.index_of(rel.left), *L.index_of(rel.right), value);
  }
  return L;
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> out;
    for (const auto& rec : records()) out.push_back({rec.name, build(rec), rec.row});
    return out;
  }();
  return all;
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& get(std::string_view name) {
  const auto& all = entries();
  const auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == all.end()) throw std::out_of_range("unknown catalog entry: " + std::string(name));
  return *it;
}

TableRow compute_row(const LieSuperalgebra& L) {
  const Quotient q = quotient(L, center(L));
  return {q.algebra.sdim(), generator_pair(q.algebra), derived_subalgebra(L).sdim()};
}

bool Table1Report::ok() const {
  return std::all_of(results.begin(), results.end(), [](const Table1Result& r) { return r.matches; });
}

Table1Report verify_table1() {
  const auto& all = entries();
  std::vector<std::future<Table1Result>> pending;
  for (const auto& entry : all) {
    pending.push_back(std::async(std::launch::async, [&entry] {
      Table1Result r{entry.name, entry.table_row, {}, false, {}};
      try {
        r.computed = compute_row(entry.algebra);
        r.matches = r.computed == r.stored;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      return r;
    }));
  }
  Table1Report report;
  for (auto& f : pending) report.results.push_back(f.get());
  return report;
}

bool ClassificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClassificationCheck& c) { return c.passed; });
}

namespace {

LieSuperalgebra padded(const LieSuperalgebra& base, SuperDim pad) {
  if (pad == SuperDim{}) return base;
  return direct_sum(base, abelian(pad.even, pad.odd));
}

void check_st(ClassificationReport& report, const LieSuperalgebra& L, SuperDim expected) {
  ClassificationCheck c{L.name(), expected, {}, true, false, {}};
  try {
    c.computed = st(L);
    c.passed = c.computed == expected;
  } catch (const std::exception& e) {
    c.note = e.what();
  }
  report.checks.push_back(std::move(c));
}

}  // namespace

ClassificationReport verify_classification() {
  ClassificationReport report;
  constexpr std::size_t max_pad = 2;
  const SuperDim zero{};

  // st = (0,0): abelian and Heisenberg families.
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t l = 0; l + k <= 3; ++l)
      if (k + l >= 1) check_st(report, abelian(k, l), zero);
  for (std::size_t a = 0; a <= max_pad; ++a)
    for (std::size_t b = 0; b <= max_pad; ++b) {
      for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t n = 0; m + n <= 2; ++n)
          if (m + n >= 1) check_st(report, padded(heisenberg_even(m, n), {a, b}), zero);
      for (std::size_t m = 1; m <= 2; ++m) check_st(report, padded(heisenberg_odd(m), {a, b}), zero);
    }

  // Finite families.
  for (const auto& family : classified_stem_families()) {
    const auto& base = get(family.base).algebra;
    for (std::size_t a = 0; a <= max_pad; ++a)
      for (std::size_t b = 0; b <= max_pad; ++b) check_st(report, padded(base, {a, b}), family.st);
  }

  // Catalog entries outside every family must not land in the classified set.
  const auto& families = classified_stem_families();
  for (const auto& entry : entries()) {
    const bool listed = std::any_of(families.begin(), families.end(),
                                    [&](const StemFamily& f) { return f.base == entry.name; });
    if (listed) continue;
    ClassificationCheck c{entry.name, {}, {}, false, false, {}};
    try {
      c.computed = st(entry.algebra);
      c.passed = !is_classified_st(c.computed);
      if (!c.passed) c.note = "st lies in the classified set but the entry is not listed";
    } catch (const std::exception& e) {
      c.note = e.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace lsa::catalog
