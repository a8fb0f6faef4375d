#include "lsa/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lsa {

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Row>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Row Matrix::row_copy(std::size_t r) const {
  const auto view = row(r);
  return Row(view.begin(), view.end());
}

Row Matrix::column(std::size_t c) const {
  Row out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

Row matvec(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: width mismatch");
  Row out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(v[c]) != 0 && sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

EchelonBasis EchelonBasis::full(std::size_t width) {
  EchelonBasis b{Matrix::identity(width), {}};
  for (std::size_t i = 0; i < width; ++i) b.pivot_cols.push_back(i);
  return b;
}

std::vector<Row> EchelonBasis::rows() const {
  std::vector<Row> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(matrix.row_copy(r));
  return out;
}

EchelonBasis rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  Scalar factor;

  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t found = prow;
    while (found < rows && sgn(m(found, col)) == 0) ++found;
    if (found == rows) continue;
    if (found != prow) {
      for (std::size_t c = col; c < cols; ++c) std::swap(m(found, c), m(prow, c));
    }

    const Scalar inv = 1 / m(prow, col);
    for (std::size_t c = col; c < cols; ++c) {
      if (sgn(m(prow, c)) != 0) m(prow, c) *= inv;
    }

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || sgn(m(r, col)) == 0) continue;
      factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (sgn(m(prow, c)) != 0) m(r, c) -= factor * m(prow, c);
      }
    }
    pivots.push_back(col);
    ++prow;
  }

  Matrix reduced(prow, cols);
  for (std::size_t r = 0; r < prow; ++r)
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = std::move(m(r, c));
  return {std::move(reduced), std::move(pivots)};
}

EchelonBasis span_of(std::size_t width, const std::vector<Row>& generators) {
  return rref(Matrix::from_rows(width, generators));
}

std::size_t rank(const Matrix& m) { return rref(m).dim(); }

EchelonBasis kernel_basis(const Matrix& m) {
  const EchelonBasis e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;

  std::vector<Row> generators;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row x(cols);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = -e.matrix(i, free);
    generators.push_back(std::move(x));
  }
  return span_of(cols, generators);
}

Row reduce(std::span<const Scalar> v, const EchelonBasis& b) {
  if (v.size() != b.width()) throw std::invalid_argument("reduce: width mismatch");
  Row rest(v.begin(), v.end());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const Scalar coeff = rest[b.pivot_cols[i]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t c = 0; c < rest.size(); ++c) {
      if (sgn(b.matrix(i, c)) != 0) rest[c] -= coeff * b.matrix(i, c);
    }
  }
  return rest;
}

std::optional<Row> membership(std::span<const Scalar> v, const EchelonBasis& b) {
  if (v.size() != b.width()) throw std::invalid_argument("membership: width mismatch");
  // Pivot columns of an RREF basis are unit vectors, so the coordinates are
  // read off directly and only the residual needs checking.
  Row coords(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) coords[i] = v[b.pivot_cols[i]];
  for (std::size_t c = 0; c < v.size(); ++c) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < b.dim(); ++i) {
      if (sgn(coords[i]) != 0 && sgn(b.matrix(i, c)) != 0) acc += coords[i] * b.matrix(i, c);
    }
    if (acc != v[c]) return std::nullopt;
  }
  return coords;
}

EchelonBasis sum_spaces(const EchelonBasis& a, const EchelonBasis& b) {
  if (a.width() != b.width()) throw std::invalid_argument("sum_spaces: width mismatch");
  Matrix stacked = a.matrix;
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.matrix.row(r));
  return rref(std::move(stacked));
}

EchelonBasis intersect_spaces(const EchelonBasis& a, const EchelonBasis& b) {
  if (a.width() != b.width()) throw std::invalid_argument("intersect_spaces: width mismatch");
  // Relations y with sum_i y_i a_i + sum_j y_{a+j} b_j = 0 correspond to
  // vectors sum_i y_i a_i lying in both spaces.
  Matrix stacked = a.matrix;
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.matrix.row(r));
  const EchelonBasis relations = kernel_basis(stacked.transposed());

  std::vector<Row> common;
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    Row v(a.width());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Scalar& y = relations.matrix(r, i);
      if (sgn(y) == 0) continue;
      for (std::size_t c = 0; c < a.width(); ++c) v[c] += y * a.matrix(i, c);
    }
    common.push_back(std::move(v));
  }
  return span_of(a.width(), common);
}

bool is_subspace(const EchelonBasis& a, const EchelonBasis& b) {
  if (a.width() != b.width()) throw std::invalid_argument("is_subspace: width mismatch");
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (!membership(a.matrix.row(r), b)) return false;
  }
  return true;
}

}  // namespace lsa
