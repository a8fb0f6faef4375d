#include "doctest.h"
#include "lsa/catalog.hpp"
#include "lsa/io.hpp"
#include "lsa/report.hpp"
#include "support.hpp"

using namespace lsa;

namespace {

io::ErrorKind kind_of(std::string_view text) {
  try {
    io::parse_algebra(text);
  } catch (const io::ParseError& e) {
    return e.kind();
  }
  FAIL("parse unexpectedly succeeded");
  return io::ErrorKind::Syntax;
}

const char* kFourTwo =
    "algebra \"(4|0)_2\"\n"
    "even: e1 e2 e3 e4\n"
    "odd:\n"
    "[e1, e2] = e3\n"
    "[e1, e3] = e4\n";

}  // namespace

TEST_CASE("parse the reference file") {
  const auto L = io::parse_algebra(kFourTwo);
  CHECK(L.name() == "(4|0)_2");
  CHECK(L.sdim() == SuperDim{4, 0});
  CHECK(catalog::compute_row(L) == catalog::get("(4|0)_2").table_row);
  CHECK(L.same_tensor(catalog::get("(4|0)_2").algebra));
}

TEST_CASE("parse details") {
  SUBCASE("bare even declaration is abelian(1,0)") {
    const auto L = io::parse_algebra("even: a\n");
    CHECK(L.sdim() == SuperDim{1, 0});
    CHECK(L.is_abelian());
    CHECK(L.name() == "unnamed");
  }
  SUBCASE("rational coefficients, comments and mirrored orientations") {
    const auto L = io::parse_algebra(
        "# comment line\n"
        "even: e1 e2\n"
        "odd: f1 f2 f3\n"
        "[f2, f2] = 2 e2   # trailing comment\n"
        "[f2, f3] = -1 e1 + 1/3 e2\n"
        "[f3, f2] = -e1 + 1/3 e2\n",
        false);
    const auto f2 = *L.index_of("f2"), f3 = *L.index_of("f3");
    CHECK(L.structure_constant(f2, f2, 1) == 2);
    CHECK(L.structure_constant(f3, f2, 0) == -1);
    CHECK(L.structure_constant(f3, f2, 1) == Scalar(1, 3));
  }
  SUBCASE("explicit zero") {
    const auto L = io::parse_algebra("even: a b\n[a, b] = 0\n");
    CHECK(L.is_abelian());
  }
}

TEST_CASE("parse errors carry the documented kind and position") {
  CHECK(kind_of("even: e1 e2 e3\n[e1, e2] = e3\n[e2, e1] = e3\n") == io::ErrorKind::ConflictingRelation);
  CHECK(kind_of("even: e1 e2 e3\n[e1, e2] = e3\n[e1, e2] = e3\n") == io::ErrorKind::ConflictingRelation);
  CHECK(kind_of("even: e1 e2\n[e1, e1] = e2\n") == io::ErrorKind::ConflictingRelation);
  CHECK(kind_of("even: e1 e2\n[e1, x] = e2\n") == io::ErrorKind::UnknownName);
  CHECK(kind_of("even: e1 e2\n[e1, e2] = y\n") == io::ErrorKind::UnknownName);
  CHECK(kind_of("even: e1 e2 e3\n[e1, e2] = 1/0 e3\n") == io::ErrorKind::BadRational);
  CHECK(kind_of("even: e1 e2 e3\n[e1, e2] = 1.5 e3\n") == io::ErrorKind::BadRational);
  CHECK(kind_of("even: a a\n") == io::ErrorKind::DuplicateName);
  CHECK(kind_of("even: a\nodd: a\n") == io::ErrorKind::DuplicateName);
  CHECK(kind_of("even: e1 e2\n[e1 e2] = e1\n") == io::ErrorKind::Syntax);
  CHECK(kind_of("[a, b] = 0\neven: a b\n") == io::ErrorKind::Syntax);
  CHECK(kind_of("even: e1 e2\nodd: f1\n[e1, e2] = f1\n") == io::ErrorKind::Validation);
  // [a,b]=b, [a,c]=c, [b,c]=a violates Jacobi.
  CHECK(kind_of("even: a b c\n[a, b] = b\n[a, c] = c\n[b, c] = a\n") == io::ErrorKind::Validation);

  try {
    io::parse_algebra("even: e1 e2\n\n[e1, zz] = e2\n");
    FAIL("expected an error");
  } catch (const io::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("unknown_name") != std::string::npos);
  }
}

TEST_CASE("export then parse reproduces every catalog tensor") {
  for (const auto& e : catalog::entries()) {
    const std::string text = io::export_algebra(e.algebra);
    const auto back = io::parse_algebra(text);
    CHECK_MESSAGE(back.same_tensor(e.algebra), e.name);
    CHECK(back.name() == e.name);
    CHECK(back.basis_names() == e.algebra.basis_names());
    CHECK(io::export_algebra(back) == text);
  }
}

TEST_CASE("property: export/parse round trip on random algebras") {
  gen::Source src(51);
  for (int trial = 0; trial < 60; ++trial) {
    const auto L = src.nilpotent();
    CHECK(io::parse_algebra(io::export_algebra(L)).same_tensor(L));
  }
  // Rational structure constants survive: rescale a basis vector of a Heisenberg algebra.
  auto h = heisenberg_even(1, 1);
  Row v(h.dim());
  v[*h.index_of("z")] = Scalar(-2, 3);
  h.set_bracket(*h.index_of("x1"), *h.index_of("x2"), v);
  CHECK(io::parse_algebra(io::export_algebra(h), false).same_tensor(h));
}

TEST_CASE("JSON reports") {
  const auto r = report::to_json(invariant_report(catalog::get("(4|0)_2").algebra));
  CHECK(r["st"] == report::Json::array({1, 0}));
  CHECK(r["nilpotency_class"] == 3);
  CHECK(report::to_json(invariant_report(abelian(2, 1)))["nilpotency_class"] == 1);

  const auto& L = catalog::get("(3|2)_13").algebra;
  const auto b = report::bounds_json(L, schur_bound_check(L), idstar_bound_check(L), proposition_audit(L));
  CHECK(b["schur"]["schur_bound_holds"] == true);
  CHECK(b["schur"].contains("sdim_mod_center"));
  CHECK(b["schur"].contains("lambda"));
  CHECK(b["all_hold"] == true);

  // Key order is fixed; repeated emission is byte-identical.
  const auto first = report::emit(r);
  CHECK(first == report::emit(report::to_json(invariant_report(catalog::get("(4|0)_2").algebra))));
  CHECK(first.find("\"algebra\"") < first.find("\"sdim\""));
  CHECK(first.find("\"sdim\"") < first.find("\"st\""));

  Matrix m(1, 2);
  m(0, 0) = Scalar(1, 3);
  m(0, 1) = 2;
  CHECK(report::to_json(m).dump() == R"([["1/3","2"]])");
}
