#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "laurentsys/field.hpp"

namespace laurentsys {

/// Dense row-major matrix over a Field.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const Field& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  FieldValue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldValue& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const FieldValue> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  static DenseMatrix identity(std::size_t n, const Field& field);
  static DenseMatrix from_rows(const std::vector<std::vector<FieldValue>>& rows, const Field& field);

  /// M x. Throws DimensionMismatch.
  std::vector<FieldValue> apply(std::span<const FieldValue> x) const;
  bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&);

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<FieldValue> data_;
};

struct EchelonForm {
  DenseMatrix reduced;
  /// Pivot column of each nonzero row, increasing.
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form. Exact fields only
/// (FloatFieldUnsupported otherwise): rank is discontinuous in floating point.
EchelonForm reduced_row_echelon(DenseMatrix m);

std::size_t matrix_rank(const DenseMatrix& m);

/// Basis of { x : M x = 0 }, normalised to reduced row echelon form with
/// rows ordered by pivot position. Empty when M has full column rank.
std::vector<std::vector<FieldValue>> nullspace_basis(const DenseMatrix& m);

}  // namespace laurentsys
