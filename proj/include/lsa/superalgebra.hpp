#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsa/linalg.hpp"
#include "lsa/superdim.hpp"

namespace lsa {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
constexpr int as_int(Parity p) { return static_cast<int>(p); }

/// (-1)^(a*b) for parities a, b.
constexpr int sign(Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }

/// Finite-dimensional Lie superalgebra given by structure constants.
///
/// Basis indices 0..even-1 are even and even..even+odd-1 are odd. The tensor
/// stores both orientations: structure_constant(i, j, k) is the coefficient of
/// b_k in [b_i, b_j]. set_bracket() keeps the mirror entry consistent with
/// super-skew-symmetry, set_structure_constant() writes a single cell.
class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;
  LieSuperalgebra(std::string name, SuperDim sdim, std::vector<std::string> basis_names = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  SuperDim sdim() const { return sdim_; }
  std::size_t dim() const { return sdim_.total(); }
  Parity parity(std::size_t i) const { return i < sdim_.even ? Parity::Even : Parity::Odd; }

  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view basis_name) const;

  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  void set_structure_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value);

  /// Sets [b_i, b_j] = value and [b_j, b_i] by the skew rule. Throws
  /// std::invalid_argument if value has the wrong parity, or if i == j and
  /// skew-symmetry forces the bracket to vanish.
  void set_bracket(std::size_t i, std::size_t j, std::span<const Scalar> value);

  Row bracket_of_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the structure tensor.
  Row bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  /// Matrix of ad_{b_i}: column j holds [b_i, b_j].
  Matrix adjoint(std::size_t i) const;

  bool is_abelian() const;

  /// Identical dimension, parities and structure tensor (names ignored).
  bool same_tensor(const LieSuperalgebra& other) const;

 private:
  std::string name_;
  SuperDim sdim_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
};

/// Coordinate vector of an element; homogeneous iff supported on one parity.
struct GradedVector {
  Row coords;

  std::optional<Parity> parity(SuperDim sdim) const;
};

GradedVector basis_vector(const LieSuperalgebra& L, std::size_t i);
GradedVector bracket(const LieSuperalgebra& L, const GradedVector& x, const GradedVector& y);

/// Subspace of L stored as separate echelon bases of its even and odd parts
/// (each in the coordinates of that parity).
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(EchelonBasis even, EchelonBasis odd);

  static GradedSubspace zero(SuperDim ambient);
  static GradedSubspace whole(SuperDim ambient);

  /// Span of the homogeneous components of the given full-coordinate vectors.
  /// Equals the span of the vectors themselves when they are homogeneous.
  static GradedSubspace span(SuperDim ambient, const std::vector<Row>& vectors);

  const EchelonBasis& even_part() const { return even_; }
  const EchelonBasis& odd_part() const { return odd_; }
  SuperDim sdim() const { return {even_.dim(), odd_.dim()}; }
  SuperDim ambient() const { return {even_.width(), odd_.width()}; }

  /// Basis in full coordinates, even vectors first.
  std::vector<Row> basis() const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const GradedSubspace& other) const;

  friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;

 private:
  EchelonBasis even_;
  EchelonBasis odd_;
};

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);

/// One law of the validation report. `witness` holds the basis indices of the
/// first violation found, in iteration order.
struct LawCheck {
  std::string law;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<LawCheck> checks;  // grading, super-skew-symmetry, super-Jacobi

  bool ok() const;
  const LawCheck* first_failure() const;
};

/// Checks grading, super-skew-symmetry [x,y] = -(-1)^{|x||y|}[y,x] and the
/// cyclic super-Jacobi identity on all basis pairs/triples.
ValidationReport validate(const LieSuperalgebra& L);

LieSuperalgebra abelian(std::size_t even, std::size_t odd);

/// H(m,n): [x_i, x_{m+i}] = z (i = 1..m), [y_j, y_j] = z (j = 1..n), z even.
LieSuperalgebra heisenberg_even(std::size_t m, std::size_t n);

/// H_m: [x_j, y_j] = z (j = 1..m) with x even, y and z odd.
LieSuperalgebra heisenberg_odd(std::size_t m);

/// Block direct sum; even basis of a, even basis of b, odd of a, odd of b.
LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b);

/// Filiform tower <s, s_1..s_{t+2} | [s, s_i] = s_{i+1}, i = 1..t+1>.
LieSuperalgebra tower(std::size_t t);

/// True when [b_j, v] stays inside S for every basis b_j and every v in S.
bool is_ideal(const LieSuperalgebra& L, const GradedSubspace& S);

struct Quotient {
  LieSuperalgebra algebra;
  /// Indices of L's basis vectors whose images form the quotient basis.
  std::vector<std::size_t> representatives;
  /// (dim L/I) x (dim L) matrix of the canonical projection.
  Matrix projection;

  Row project(std::span<const Scalar> v) const { return matvec(projection, v); }
  /// Representative in L of a quotient coordinate vector.
  Row lift(std::span<const Scalar> w, std::size_t ambient_dim) const;
  /// Full preimage in L of a graded subspace of the quotient.
  GradedSubspace preimage(const GradedSubspace& W, const GradedSubspace& ideal, SuperDim ambient) const;
};

/// L/I. Quotient basis: images of the non-pivot coordinates of I's echelon
/// bases, even then odd. Throws std::invalid_argument if I is not a graded
/// ideal of L.
Quotient quotient(const LieSuperalgebra& L, const GradedSubspace& I);

/// The subalgebra spanned by a graded subspace closed under the bracket,
/// written in the basis formed by S's echelon rows. Throws
/// std::invalid_argument if S is not closed.
LieSuperalgebra restrict_to(const LieSuperalgebra& L, const GradedSubspace& S, std::string name);

}  // namespace lsa
