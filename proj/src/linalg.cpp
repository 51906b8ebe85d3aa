#include "laurentsys/linalg.hpp"

#include <string>
#include <utility>

#include "laurentsys/error.hpp"

namespace laurentsys {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

DenseMatrix DenseMatrix::identity(std::size_t n, const Field& field) {
  DenseMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<FieldValue>>& rows, const Field& field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw RaggedMatrix("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].field() == field)) throw MixedFieldError("matrix entry from another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<FieldValue> DenseMatrix::apply(std::span<const FieldValue> x) const {
  if (x.size() != cols_) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " for a matrix with " +
                            std::to_string(cols_) + " columns");
  }
  std::vector<FieldValue> y(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const FieldValue& a = (*this)(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

bool DenseMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

EchelonForm reduced_row_echelon(DenseMatrix m) {
  if (!m.field().is_exact()) {
    throw FloatFieldUnsupported("exact elimination needs an exact field, got " + m.field().to_string());
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const FieldValue inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FieldValue factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t matrix_rank(const DenseMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<std::vector<FieldValue>> nullspace_basis(const DenseMatrix& m) {
  const EchelonForm ech = reduced_row_echelon(m);
  const Field& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  // One generator per free column: x_free = 1, x_pivot = -R[row, free].
  std::vector<std::vector<FieldValue>> generators;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldValue> x(m.cols(), field.zero());
    x[free] = field.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = -ech.reduced(r, free);
    generators.push_back(std::move(x));
  }
  if (generators.empty()) return {};

  const EchelonForm normal = reduced_row_echelon(DenseMatrix::from_rows(generators, field));
  std::vector<std::vector<FieldValue>> basis;
  for (std::size_t r = 0; r < normal.pivots.size(); ++r) {
    const auto row = normal.reduced.row(r);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

}  // namespace laurentsys
