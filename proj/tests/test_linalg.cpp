#include "doctest.h"
#include "lsa/linalg.hpp"
#include "support.hpp"

using namespace lsa;

namespace {

Row r(std::initializer_list<long> xs) {
  Row out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Matrix from(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Row> rs;
  for (auto row : rows) rs.push_back(r(row));
  return Matrix::from_rows(cols, rs);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(Scalar(4)) == "4");
  CHECK(to_string(*parse_rational("4/2")) == "2");
  CHECK(to_string(Scalar(-1, 3)) == "-1/3");
  CHECK(parse_rational("1/3") == Scalar(1, 3));
  CHECK(parse_rational("-6/4") == Scalar(-3, 2));
  CHECK(parse_rational("+7") == Scalar(7));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1.5"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("/3"));
}

TEST_CASE("rref examples") {
  SUBCASE("identity is fixed") {
    auto e = rref(Matrix::identity(2));
    CHECK(e.matrix == Matrix::identity(2));
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("dependent rows collapse") {
    auto e = rref(from(2, {{1, 2}, {2, 4}}));
    CHECK(e.matrix == from(2, {{1, 2}}));
    CHECK(e.pivot_cols == std::vector<std::size_t>{0});
  }
  SUBCASE("hand reduction") {
    auto e = rref(from(3, {{0, 1, 1}, {1, 0, 2}}));
    CHECK(e.matrix == from(3, {{1, 0, 2}, {0, 1, 1}}));
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix(2, 2)).dim() == 2);
  CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
  const Matrix ones = from(3, {{1, 1, 1}});
  const auto k = kernel_basis(ones);
  REQUIRE(k.dim() == 2);
  for (const auto& v : k.rows()) CHECK(matvec(ones, v) == r({0}));
}

TEST_CASE("membership examples") {
  const auto b = span_of(3, {r({1, 0, 1}), r({0, 1, 1})});
  auto zero = membership(r({0, 0, 0}), b);
  REQUIRE(zero);
  CHECK(*zero == r({0, 0}));
  auto first = membership(b.matrix.row(0), b);
  REQUIRE(first);
  CHECK(*first == r({1, 0}));
  auto mixed = membership(r({2, -3, -1}), b);
  REQUIRE(mixed);
  CHECK(*mixed == r({2, -3}));
  CHECK_FALSE(membership(r({0, 1}), span_of(2, {r({1, 0})})));
  CHECK_THROWS_AS(membership(r({1, 0}), b), std::invalid_argument);
}

TEST_CASE("sum and intersection examples") {
  const auto a = span_of(3, {r({1, 2, 0}), r({0, 0, 1})});
  CHECK(sum_spaces(a, a) == a);
  CHECK(intersect_spaces(a, a) == a);

  const auto x = span_of(2, {r({1, 0})});
  const auto y = span_of(2, {r({0, 1})});
  CHECK(sum_spaces(x, y) == EchelonBasis::full(2));
  CHECK(intersect_spaces(x, y).dim() == 0);

  const auto p = span_of(3, {r({1, 0, 0}), r({0, 1, 0})});
  const auto q = span_of(3, {r({0, 1, 0}), r({0, 0, 1})});
  CHECK(intersect_spaces(p, q) == span_of(3, {r({0, 1, 0})}));
  CHECK(is_subspace(intersect_spaces(p, q), p));
  CHECK_FALSE(is_subspace(q, p));
}

TEST_CASE("property: rank plus nullity equals width") {
  gen::Source src(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(src.integer(1, 6));
    const auto cols = static_cast<std::size_t>(src.integer(1, 6));
    const Matrix m = src.matrix(rows, cols);
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == cols);
    CHECK(rank(m) == oracle::rank([&] {
            oracle::Rows rs;
            for (std::size_t i = 0; i < rows; ++i) rs.push_back(m.row_copy(i));
            return rs;
          }()));
    for (const auto& v : k.rows()) CHECK(matvec(m, v) == Row(rows));
  }
}

TEST_CASE("property: rref is idempotent and preserves the row space") {
  gen::Source src(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = src.matrix(static_cast<std::size_t>(src.integer(1, 5)), static_cast<std::size_t>(src.integer(1, 6)));
    const auto once = rref(m);
    CHECK(rref(once.matrix) == once);
    for (std::size_t i = 0; i < m.rows(); ++i) CHECK(membership(m.row(i), once));
  }
}

TEST_CASE("property: Grassmann identity on random subspaces") {
  gen::Source src(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto width = static_cast<std::size_t>(src.integer(1, 6));
    auto random_space = [&] {
      std::vector<Row> gens;
      const auto count = src.integer(0, 4);
      for (long i = 0; i < count; ++i) gens.push_back(src.vector(width));
      return span_of(width, gens);
    };
    const auto a = random_space();
    const auto b = random_space();
    const auto s = sum_spaces(a, b);
    const auto i = intersect_spaces(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(is_subspace(i, a));
    CHECK(is_subspace(i, b));
    CHECK(is_subspace(a, s));
    CHECK(is_subspace(b, s));
  }
}
