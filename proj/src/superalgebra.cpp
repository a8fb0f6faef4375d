#include "lsa/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace lsa {

namespace {

std::vector<std::string> default_names(SuperDim sdim) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= sdim.even; ++i) names.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= sdim.odd; ++i) names.push_back("f" + std::to_string(i));
  return names;
}

Row unit(std::size_t n, std::size_t i) {
  Row v(n);
  v[i] = 1;
  return v;
}

// Splits a full-coordinate vector into its even and odd coordinate blocks.
std::pair<Row, Row> split(SuperDim sdim, std::span<const Scalar> v) {
  return {Row(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(sdim.even)),
          Row(v.begin() + static_cast<std::ptrdiff_t>(sdim.even), v.end())};
}

Row join(const Row& even, const Row& odd) {
  Row v = even;
  v.insert(v.end(), odd.begin(), odd.end());
  return v;
}

std::vector<std::size_t> non_pivots(const EchelonBasis& b) {
  std::vector<bool> pivot(b.width(), false);
  for (auto p : b.pivot_cols) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < b.width(); ++c) {
    if (!pivot[c]) out.push_back(c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieSuperalgebra

LieSuperalgebra::LieSuperalgebra(std::string name, SuperDim sdim, std::vector<std::string> basis_names)
    : name_(std::move(name)), sdim_(sdim), names_(std::move(basis_names)) {
  if (names_.empty()) names_ = default_names(sdim);
  if (names_.size() != sdim.total()) throw std::invalid_argument("basis name count does not match superdimension");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("basis names must be distinct");
  c_.resize(dim() * dim() * dim());
}

std::optional<std::size_t> LieSuperalgebra::index_of(std::string_view basis_name) const {
  const auto it = std::find(names_.begin(), names_.end(), basis_name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void LieSuperalgebra::set_structure_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
  c_.at((i * dim() + j) * dim() + k) = std::move(value);
}

void LieSuperalgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Scalar> value) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("set_bracket: basis index out of range");
  if (value.size() != dim()) throw std::invalid_argument("set_bracket: width mismatch");
  const Parity target = parity(i) + parity(j);
  const int s = sign(parity(i), parity(j));
  for (std::size_t k = 0; k < dim(); ++k) {
    if (sgn(value[k]) != 0 && parity(k) != target)
      throw std::invalid_argument("set_bracket: [" + names_[i] + ", " + names_[j] + "] has a component of the wrong parity");
  }
  if (i == j && s == 1) {
    for (const auto& x : value) {
      if (sgn(x) != 0)
        throw std::invalid_argument("set_bracket: skew-symmetry forces [" + names_[i] + ", " + names_[i] + "] = 0");
    }
  }
  for (std::size_t k = 0; k < dim(); ++k) {
    set_structure_constant(i, j, k, value[k]);
    set_structure_constant(j, i, k, -s * value[k]);
  }
}

Row LieSuperalgebra::bracket_of_basis(std::size_t i, std::size_t j) const {
  Row out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = structure_constant(i, j, k);
  return out;
}

Row LieSuperalgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket: width mismatch");
  Row out(dim());
  Scalar xy;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k) {
        const Scalar& c = structure_constant(i, j, k);
        if (sgn(c) != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

Matrix LieSuperalgebra::adjoint(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = structure_constant(i, j, k);
  return m;
}

bool LieSuperalgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool LieSuperalgebra::same_tensor(const LieSuperalgebra& other) const {
  return sdim_ == other.sdim_ && c_ == other.c_;
}

// ---------------------------------------------------------------------------
// GradedVector

std::optional<Parity> GradedVector::parity(SuperDim sdim) const {
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    (i < sdim.even ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? Parity::Odd : Parity::Even;
}

GradedVector basis_vector(const LieSuperalgebra& L, std::size_t i) { return {unit(L.dim(), i)}; }

GradedVector bracket(const LieSuperalgebra& L, const GradedVector& x, const GradedVector& y) {
  return {L.bracket(x.coords, y.coords)};
}

// ---------------------------------------------------------------------------
// GradedSubspace

GradedSubspace::GradedSubspace(EchelonBasis even, EchelonBasis odd) : even_(std::move(even)), odd_(std::move(odd)) {}

GradedSubspace GradedSubspace::zero(SuperDim ambient) {
  return {EchelonBasis::zero(ambient.even), EchelonBasis::zero(ambient.odd)};
}

GradedSubspace GradedSubspace::whole(SuperDim ambient) {
  return {EchelonBasis::full(ambient.even), EchelonBasis::full(ambient.odd)};
}

GradedSubspace GradedSubspace::span(SuperDim ambient, const std::vector<Row>& vectors) {
  std::vector<Row> evens;
  std::vector<Row> odds;
  for (const auto& v : vectors) {
    if (v.size() != ambient.total()) throw std::invalid_argument("GradedSubspace::span: width mismatch");
    auto [e, o] = split(ambient, v);
    evens.push_back(std::move(e));
    odds.push_back(std::move(o));
  }
  return {span_of(ambient.even, evens), span_of(ambient.odd, odds)};
}

std::vector<Row> GradedSubspace::basis() const {
  std::vector<Row> out;
  const Row zero_even(even_.width());
  const Row zero_odd(odd_.width());
  for (std::size_t r = 0; r < even_.dim(); ++r) out.push_back(join(even_.matrix.row_copy(r), zero_odd));
  for (std::size_t r = 0; r < odd_.dim(); ++r) out.push_back(join(zero_even, odd_.matrix.row_copy(r)));
  return out;
}

bool GradedSubspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient().total()) throw std::invalid_argument("GradedSubspace::contains: width mismatch");
  const auto [e, o] = split(ambient(), v);
  return membership(e, even_).has_value() && membership(o, odd_).has_value();
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  return is_subspace(other.even_, even_) && is_subspace(other.odd_, odd_);
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  return {sum_spaces(a.even_part(), b.even_part()), sum_spaces(a.odd_part(), b.odd_part())};
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
  return {intersect_spaces(a.even_part(), b.even_part()), intersect_spaces(a.odd_part(), b.odd_part())};
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

const LawCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

ValidationReport validate(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  const auto& names = L.basis_names();
  ValidationReport report;

  LawCheck grading{"grading", true, {}, {}};
  for (std::size_t i = 0; i < n && grading.passed; ++i)
    for (std::size_t j = 0; j < n && grading.passed; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(L.structure_constant(i, j, k)) != 0 && L.parity(k) != L.parity(i) + L.parity(j)) {
          grading = {"grading", false, {i, j, k},
                     "[" + names[i] + ", " + names[j] + "] has a component along " + names[k] + " of the wrong parity"};
          break;
        }
      }
  report.checks.push_back(grading);

  LawCheck skew{"super-skew-symmetry", true, {}, {}};
  for (std::size_t i = 0; i < n && skew.passed; ++i)
    for (std::size_t j = i; j < n && skew.passed; ++j) {
      const int s = sign(L.parity(i), L.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (L.structure_constant(j, i, k) != -s * L.structure_constant(i, j, k)) {
          skew = {"super-skew-symmetry", false, {i, j},
                  "[" + names[j] + ", " + names[i] + "] != -(-1)^{|x||y|} [" + names[i] + ", " + names[j] + "]"};
          break;
        }
      }
    }
  report.checks.push_back(skew);

  // Cyclic form: (-1)^{|x||z|}[x,[y,z]] + (-1)^{|x||y|}[y,[z,x]] + (-1)^{|y||z|}[z,[x,y]] = 0.
  std::vector<Row> pair(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pair[i * n + j] = L.bracket_of_basis(i, j);
  auto basis_with = [&](std::size_t i, const Row& v, Row& acc, int s) {
    for (std::size_t l = 0; l < n; ++l) {
      if (sgn(v[l]) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = L.structure_constant(i, l, k);
        if (sgn(c) != 0) acc[k] += s * v[l] * c;
      }
    }
  };
  LawCheck jacobi{"super-Jacobi", true, {}, {}};
  for (std::size_t x = 0; x < n && jacobi.passed; ++x)
    for (std::size_t y = 0; y < n && jacobi.passed; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Row acc(n);
        basis_with(x, pair[y * n + z], acc, sign(L.parity(x), L.parity(z)));
        basis_with(y, pair[z * n + x], acc, sign(L.parity(x), L.parity(y)));
        basis_with(z, pair[x * n + y], acc, sign(L.parity(y), L.parity(z)));
        if (std::any_of(acc.begin(), acc.end(), [](const Scalar& a) { return sgn(a) != 0; })) {
          jacobi = {"super-Jacobi", false, {x, y, z},
                    "identity fails on (" + names[x] + ", " + names[y] + ", " + names[z] + ")"};
          break;
        }
      }
  report.checks.push_back(jacobi);
  return report;
}

// ---------------------------------------------------------------------------
// Constructors

LieSuperalgebra abelian(std::size_t even, std::size_t odd) {
  return LieSuperalgebra("A(" + std::to_string(even) + "|" + std::to_string(odd) + ")", {even, odd});
}

LieSuperalgebra heisenberg_even(std::size_t m, std::size_t n) {
  if (m + n == 0) throw std::invalid_argument("heisenberg_even: m + n must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= 2 * m; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("z");
  for (std::size_t j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
  LieSuperalgebra L("H(" + std::to_string(m) + "," + std::to_string(n) + ")", {2 * m + 1, n}, std::move(names));
  const std::size_t z = 2 * m;
  const Row zv = unit(L.dim(), z);
  for (std::size_t i = 0; i < m; ++i) L.set_bracket(i, m + i, zv);
  for (std::size_t j = 0; j < n; ++j) L.set_bracket(2 * m + 1 + j, 2 * m + 1 + j, zv);
  return L;
}

LieSuperalgebra heisenberg_odd(std::size_t m) {
  if (m == 0) throw std::invalid_argument("heisenberg_odd: m must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  LieSuperalgebra L("H_" + std::to_string(m), {m, m + 1}, std::move(names));
  const Row zv = unit(L.dim(), 2 * m);
  for (std::size_t j = 0; j < m; ++j) L.set_bracket(j, m + j, zv);
  return L;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b) {
  const SuperDim sa = a.sdim();
  const SuperDim sb = b.sdim();
  const SuperDim s = sa + sb;

  // Position of each summand's basis vector in the sum.
  std::vector<std::size_t> pos_a(a.dim());
  std::vector<std::size_t> pos_b(b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) pos_a[i] = i < sa.even ? i : sb.even + i;
  for (std::size_t i = 0; i < b.dim(); ++i) pos_b[i] = i < sb.even ? sa.even + i : sa.total() + i;

  std::vector<std::string> names(s.total());
  std::set<std::string> used;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    names[pos_a[i]] = a.basis_name(i);
    used.insert(a.basis_name(i));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    std::string nm = b.basis_name(i);
    while (used.count(nm) != 0) nm += "'";
    used.insert(nm);
    names[pos_b[i]] = nm;
  }

  LieSuperalgebra out(a.name() + " + " + b.name(), s, std::move(names));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (sgn(a.structure_constant(i, j, k)) != 0)
          out.set_structure_constant(pos_a[i], pos_a[j], pos_a[k], a.structure_constant(i, j, k));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (sgn(b.structure_constant(i, j, k)) != 0)
          out.set_structure_constant(pos_b[i], pos_b[j], pos_b[k], b.structure_constant(i, j, k));
  return out;
}

LieSuperalgebra tower(std::size_t t) {
  if (t == 0) throw std::invalid_argument("tower: t must be positive");
  std::vector<std::string> names{"s"};
  for (std::size_t i = 1; i <= t + 2; ++i) names.push_back("s" + std::to_string(i));
  LieSuperalgebra L("tower(" + std::to_string(t) + ")", {t + 3, 0}, std::move(names));
  // basis index of s_i is i
  for (std::size_t i = 1; i <= t + 1; ++i) L.set_bracket(0, i, unit(L.dim(), i + 1));
  return L;
}

// ---------------------------------------------------------------------------
// Ideals, quotients, subalgebras

bool is_ideal(const LieSuperalgebra& L, const GradedSubspace& S) {
  if (S.ambient() != L.sdim()) throw std::invalid_argument("is_ideal: subspace does not live in L");
  for (const auto& v : S.basis()) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (!S.contains(L.bracket(unit(L.dim(), j), v))) return false;
    }
  }
  return true;
}

Row Quotient::lift(std::span<const Scalar> w, std::size_t ambient_dim) const {
  if (w.size() != representatives.size()) throw std::invalid_argument("Quotient::lift: width mismatch");
  Row v(ambient_dim);
  for (std::size_t q = 0; q < w.size(); ++q) v[representatives[q]] = w[q];
  return v;
}

GradedSubspace Quotient::preimage(const GradedSubspace& W, const GradedSubspace& ideal, SuperDim ambient) const {
  std::vector<Row> lifted;
  for (const auto& w : W.basis()) lifted.push_back(lift(w, ambient.total()));
  return sum(GradedSubspace::span(ambient, lifted), ideal);
}

Quotient quotient(const LieSuperalgebra& L, const GradedSubspace& I) {
  if (I.ambient() != L.sdim()) throw std::invalid_argument("quotient: subspace is not graded-compatible with L");
  if (!is_ideal(L, I)) throw std::invalid_argument("quotient: subspace is not an ideal");

  const SuperDim s = L.sdim();
  const auto keep_even = non_pivots(I.even_part());
  const auto keep_odd = non_pivots(I.odd_part());

  Quotient q;
  std::vector<std::string> names;
  for (auto c : keep_even) {
    q.representatives.push_back(c);
    names.push_back(L.basis_name(c));
  }
  for (auto c : keep_odd) {
    q.representatives.push_back(s.even + c);
    names.push_back(L.basis_name(s.even + c));
  }

  const std::size_t qdim = q.representatives.size();
  q.projection = Matrix(qdim, L.dim());
  for (std::size_t col = 0; col < L.dim(); ++col) {
    const auto [e, o] = split(s, unit(L.dim(), col));
    const Row re = reduce(e, I.even_part());
    const Row ro = reduce(o, I.odd_part());
    std::size_t r = 0;
    for (auto c : keep_even) q.projection(r++, col) = re[c];
    for (auto c : keep_odd) q.projection(r++, col) = ro[c];
  }

  q.algebra = LieSuperalgebra(L.name() + "/I", {keep_even.size(), keep_odd.size()}, std::move(names));
  for (std::size_t a = 0; a < qdim; ++a)
    for (std::size_t b = 0; b < qdim; ++b) {
      const Row image = q.project(L.bracket_of_basis(q.representatives[a], q.representatives[b]));
      for (std::size_t k = 0; k < qdim; ++k) {
        if (sgn(image[k]) != 0) q.algebra.set_structure_constant(a, b, k, image[k]);
      }
    }
  return q;
}

LieSuperalgebra restrict_to(const LieSuperalgebra& L, const GradedSubspace& S, std::string name) {
  if (S.ambient() != L.sdim()) throw std::invalid_argument("restrict_to: subspace does not live in L");
  const auto basis = S.basis();
  const SuperDim sd = S.sdim();

  std::vector<std::string> names;
  for (const auto& v : basis) {
    // Name each basis vector after its leading coordinate.
    const auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
    names.push_back(L.basis_name(static_cast<std::size_t>(lead - v.begin())));
  }
  LieSuperalgebra T(std::move(name), sd, std::move(names));

  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Row v = L.bracket(basis[a], basis[b]);
      const auto [e, o] = split(L.sdim(), v);
      const auto ce = membership(e, S.even_part());
      const auto co = membership(o, S.odd_part());
      if (!ce || !co) throw std::invalid_argument("restrict_to: subspace is not closed under the bracket");
      for (std::size_t k = 0; k < sd.even; ++k)
        if (sgn((*ce)[k]) != 0) T.set_structure_constant(a, b, k, (*ce)[k]);
      for (std::size_t k = 0; k < sd.odd; ++k)
        if (sgn((*co)[k]) != 0) T.set_structure_constant(a, b, sd.even + k, (*co)[k]);
    }
  return T;
}

}  // namespace lsa
