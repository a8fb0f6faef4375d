#include "doctest.h"
#include "lsa/catalog.hpp"
#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"
#include "support.hpp"

using namespace lsa;

namespace {

Row unit(const LieSuperalgebra& L, const std::string& name, Scalar c = 1) {
  Row v(L.dim());
  v[*L.index_of(name)] = c;
  return v;
}

Row br(const LieSuperalgebra& L, const std::string& a, const std::string& b) {
  return L.bracket(unit(L, a), unit(L, b));
}

}  // namespace

TEST_CASE("brackets of catalog presentations") {
  const auto& a = catalog::get("(4|0)_2").algebra;
  CHECK(br(a, "e1", "e2") == unit(a, "e3"));
  CHECK(br(a, "e2", "e1") == unit(a, "e3", -1));
  const auto& b = catalog::get("(2|2)_6").algebra;
  CHECK(br(b, "f2", "f2") == unit(b, "e1"));
  const auto& c = catalog::get("(3|2)_13").algebra;
  CHECK(br(c, "f2", "f2") == unit(c, "e2", 2));
  CHECK(br(c, "f2", "f1") == br(c, "f1", "f2"));  // odd-odd is symmetric
}

TEST_CASE("even self-brackets vanish") {
  for (const auto& e : catalog::entries())
    for (std::size_t i = 0; i < e.algebra.sdim().even; ++i)
      CHECK(e.algebra.bracket_of_basis(i, i) == Row(e.algebra.dim()));
}

TEST_CASE("set_bracket rejects parity violations") {
  LieSuperalgebra L("x", {2, 1});
  CHECK_THROWS(L.set_bracket(0, 1, unit(L, "f1")));  // even,even -> odd
  CHECK_THROWS(L.set_bracket(0, 0, unit(L, "e2")));  // even diagonal
  L.set_bracket(2, 2, unit(L, "e1", 2));
  CHECK(validate(L).ok());
}

TEST_CASE("validate") {
  CHECK(validate(abelian(2, 3)).ok());
  CHECK(validate(catalog::get("(3|2)_13").algebra).ok());

  SUBCASE("tampered skew sign is caught at the pair") {
    auto L = catalog::get("(4|0)_2").algebra;
    const auto e1 = *L.index_of("e1"), e2 = *L.index_of("e2"), e3 = *L.index_of("e3");
    L.set_structure_constant(e2, e1, e3, 1);
    const auto report = validate(L);
    CHECK_FALSE(report.ok());
    const auto* failure = report.first_failure();
    REQUIRE(failure);
    CHECK(failure->law == "super-skew-symmetry");
    CHECK(failure->witness == std::vector<std::size_t>{e1, e2});
  }
  SUBCASE("odd structure constant in an even bracket fails grading") {
    auto L = abelian(2, 1);
    L.set_structure_constant(0, 1, 2, 1);
    L.set_structure_constant(1, 0, 2, -1);
    CHECK(validate(L).first_failure()->law == "grading");
  }
  SUBCASE("Jacobi failure") {
    // [a,b]=b, [a,c]=c, [b,c]=a is skew but not Jacobi.
    LieSuperalgebra L("bad", {3, 0}, {"a", "b", "c"});
    L.set_bracket(0, 1, unit(L, "b"));
    L.set_bracket(0, 2, unit(L, "c"));
    L.set_bracket(1, 2, unit(L, "a"));
    const auto report = validate(L);
    REQUIRE(report.first_failure());
    CHECK(report.first_failure()->law == "super-Jacobi");
  }
}

TEST_CASE("abelian constructor") {
  auto a = abelian(1, 0);
  CHECK(a.sdim() == SuperDim{1, 0});
  CHECK(derived_subalgebra(a).sdim() == SuperDim{0, 0});
  auto b = abelian(0, 2);
  CHECK(b.is_abelian());
  CHECK(b.bracket_of_basis(0, 0) == Row(2));
  auto c = abelian(2, 3);
  CHECK(c.sdim() == SuperDim{2, 3});
  CHECK(center(c) == GradedSubspace::whole({2, 3}));
}

TEST_CASE("Heisenberg constructors") {
  auto h = heisenberg_even(1, 0);
  CHECK(h.sdim() == SuperDim{3, 0});
  CHECK(br(h, "x1", "x2") == unit(h, "z"));
  auto g = heisenberg_even(0, 1);
  CHECK(g.sdim() == SuperDim{1, 1});
  CHECK(br(g, "y1", "y1") == unit(g, "z"));
  auto h22 = heisenberg_even(2, 2);
  CHECK(center(h22) == GradedSubspace::span(h22.sdim(), {unit(h22, "z")}));

  auto o = heisenberg_odd(1);
  CHECK(o.sdim() == SuperDim{1, 2});
  CHECK(br(o, "x1", "y1") == unit(o, "z"));
  auto o3 = heisenberg_odd(3);
  CHECK(center(o3) == GradedSubspace::span(o3.sdim(), {unit(o3, "z")}));
  CHECK(center(o3).sdim() == SuperDim{0, 1});

  CHECK_THROWS(heisenberg_even(0, 0));
  CHECK_THROWS(heisenberg_odd(0));
}

TEST_CASE("direct sums") {
  const auto& x = catalog::get("(4|0)_2").algebra;
  auto same = direct_sum(x, abelian(0, 0));
  CHECK(same.same_tensor(x));
  CHECK(direct_sum(x, abelian(1, 2)).sdim() == SuperDim{5, 2});
  CHECK(center(direct_sum(catalog::get("(2|2)_6").algebra, abelian(1, 0))).sdim() == SuperDim{2, 1});
  CHECK(validate(direct_sum(x, x)).ok());
}

TEST_CASE("tower constructor") {
  CHECK(catalog::compute_row(tower(1)) == catalog::TableRow{{3, 0}, {2, 0}, {2, 0}});
  CHECK(tower(2).sdim() == SuperDim{5, 0});
  CHECK(nilpotency_class(tower(2)) == 4u);
  CHECK(derived_subalgebra(tower(3)).sdim() == SuperDim{4, 0});
  CHECK_THROWS(tower(0));
}

TEST_CASE("quotients") {
  auto h = heisenberg_even(1, 0);
  auto q = quotient(h, center(h));
  CHECK(q.algebra.sdim() == SuperDim{2, 0});
  CHECK(q.algebra.is_abelian());

  const auto& x = catalog::get("(4|0)_2").algebra;
  auto trivial = quotient(x, GradedSubspace::zero(x.sdim()));
  CHECK(trivial.algebra.same_tensor(x));

  auto q4 = quotient(x, GradedSubspace::span(x.sdim(), {unit(x, "e4")}));
  CHECK(q4.algebra.sdim() == SuperDim{3, 0});
  CHECK(derived_subalgebra(q4.algebra).sdim() == SuperDim{1, 0});
  CHECK(center(q4.algebra).sdim() == SuperDim{1, 0});

  // Not an ideal: span{e1}.
  CHECK_THROWS(quotient(x, GradedSubspace::span(x.sdim(), {unit(x, "e1")})));
}

TEST_CASE("property: homogeneous brackets are super-skew") {
  gen::Source src(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto L = src.nilpotent();
    const bool px = src.coin(), py = src.coin();
    const Row x = src.homogeneous(L, px);
    const Row y = src.homogeneous(L, py);
    Row yx = L.bracket(y, x);
    const Scalar s = (px && py) ? 1 : -1;  // -(-1)^{|x||y|}
    Row expected = L.bracket(x, y);
    for (auto& c : expected) c *= s;
    CHECK(yx == expected);
    // The bracket lands in parity |x|+|y|.
    const Row xy = L.bracket(x, y);
    if (xy == Row(L.dim())) continue;
    const auto parity = GradedVector{xy}.parity(L.sdim());
    REQUIRE(parity);
    CHECK(*parity == ((px != py) ? Parity::Odd : Parity::Even));
  }
}

TEST_CASE("property: family members and direct sums validate") {
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; m + n <= 6; ++n)
      if (m + n > 0) CHECK(validate(heisenberg_even(m, n)).ok());
  for (std::size_t m = 1; m <= 4; ++m) CHECK(validate(heisenberg_odd(m)).ok());
  for (std::size_t t = 1; t <= 6; ++t) CHECK(validate(tower(t)).ok());
  gen::Source src(22);
  for (int trial = 0; trial < 40; ++trial)
    CHECK(validate(direct_sum(src.nilpotent(6), src.nilpotent(6))).ok());
}

TEST_CASE("property: quotients by ideals validate") {
  gen::Source src(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto L = src.nilpotent();
    // Random graded subspace of the center (always an ideal), or L^2, or a central-series term.
    GradedSubspace I = GradedSubspace::zero(L.sdim());
    switch (src.integer(0, 2)) {
      case 0: {
        std::vector<Row> gens;
        for (const auto& v : center(L).basis())
          if (src.coin()) gens.push_back(v);
        I = GradedSubspace::span(L.sdim(), gens);
        break;
      }
      case 1: I = derived_subalgebra(L); break;
      default: {
        const auto series = upper_central_series(L);
        if (!series.empty()) I = series[src.index(series.size())];
      }
    }
    REQUIRE(is_ideal(L, I));
    const auto q = quotient(L, I);
    CHECK(q.algebra.sdim() == L.sdim() - I.sdim());
    CHECK(validate(q.algebra).ok());
  }
}

TEST_CASE("property: direct sum associativity on invariant dimensions") {
  gen::Source src(24);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = src.nilpotent(4), b = src.nilpotent(4), c = src.nilpotent(4);
    const auto left = invariant_report(direct_sum(direct_sum(a, b), c));
    const auto right = invariant_report(direct_sum(a, direct_sum(b, c)));
    CHECK(left.sdim == right.sdim);
    CHECK(left.sdim_derived == right.sdim_derived);
    CHECK(left.sdim_center == right.sdim_center);
    CHECK(left.central_series == right.central_series);
    CHECK(left.st == right.st);
  }
}
