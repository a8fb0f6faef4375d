#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lsa/scalar.hpp"

namespace lsa {

using Row = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Every row must have exactly `cols` entries.
  static Matrix from_rows(std::size_t cols, const std::vector<Row>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Row row_copy(std::size_t r) const;
  Row column(std::size_t c) const;

  void append_row(std::span<const Scalar> values);
  bool is_zero() const;

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& factor) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Matrix-vector product m * v.
Row matvec(const Matrix& m, std::span<const Scalar> v);

/// Canonical representative of a row space: reduced row-echelon form with
/// zero rows dropped. Two subspaces are equal iff their echelon bases are.
struct EchelonBasis {
  Matrix matrix;
  std::vector<std::size_t> pivot_cols;

  static EchelonBasis zero(std::size_t width) { return {Matrix(0, width), {}}; }
  static EchelonBasis full(std::size_t width);

  std::size_t dim() const { return matrix.rows(); }
  std::size_t width() const { return matrix.cols(); }
  std::vector<Row> rows() const;

  friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;
};

EchelonBasis rref(Matrix m);
EchelonBasis span_of(std::size_t width, const std::vector<Row>& generators);
std::size_t rank(const Matrix& m);

/// Basis (in echelon form) of {x : m x = 0}.
EchelonBasis kernel_basis(const Matrix& m);

/// Coordinates of v with respect to the echelon rows of b, or nullopt when v
/// is outside the row space. Throws std::invalid_argument on width mismatch.
std::optional<Row> membership(std::span<const Scalar> v, const EchelonBasis& b);

/// v minus its component along the pivot columns of b. The result vanishes at
/// every pivot column and is zero iff v lies in the row space.
Row reduce(std::span<const Scalar> v, const EchelonBasis& b);

EchelonBasis sum_spaces(const EchelonBasis& a, const EchelonBasis& b);
EchelonBasis intersect_spaces(const EchelonBasis& a, const EchelonBasis& b);

/// True when every row of a lies in the row space of b.
bool is_subspace(const EchelonBasis& a, const EchelonBasis& b);

}  // namespace lsa
