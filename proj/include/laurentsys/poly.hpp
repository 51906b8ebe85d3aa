#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "laurentsys/exponent.hpp"
#include "laurentsys/field.hpp"
#include "laurentsys/terms.hpp"

namespace laurentsys {

/// Element d(X) = sum d_alpha X^alpha of the Laurent polynomial ring
/// F[X_1, X_1^-1, ..., X_r, X_r^-1]. Sparse, finitely supported, canonical.
class LaurentPoly {
 public:
  LaurentPoly(std::size_t rank, Field field) : terms_(rank, field) {}

  static LaurentPoly monomial(const Exponent& alpha, const FieldValue& coeff);
  static LaurentPoly monomial(const Field& field, const Exponent& alpha) {
    return monomial(alpha, field.one());
  }
  static LaurentPoly constant(std::size_t rank, const FieldValue& c);
  /// Like terms are combined.
  static LaurentPoly from_terms(std::size_t rank, Field field,
                                const std::vector<std::pair<Exponent, FieldValue>>& terms);

  std::size_t rank() const noexcept { return terms_.rank(); }
  const Field& field() const noexcept { return terms_.field(); }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// d_alpha, zero outside the support. Throws RankMismatch.
  FieldValue coeff(const Exponent& alpha) const { return terms_.coeff(alpha); }

  void add_term(const Exponent& alpha, const FieldValue& value) { terms_.accumulate(alpha, value); }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const FieldValue& factor);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const FieldValue& c) { return a *= c; }
  friend LaurentPoly operator*(const FieldValue& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  /// The multiplication operator m_d: sparse convolution
  /// (c d)_alpha = sum_gamma c_gamma d_{alpha - gamma}.
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_.equals(b.terms_); }

 private:
  TermMap terms_;
};

/// k x l matrix over the Laurent ring; all entries share rank and field.
class PolyMatrix {
 public:
  /// Validates shape and uniformity. Throws DimensionMismatch (k or l is 0),
  /// RaggedMatrix, RankMismatch, MixedFieldError.
  static PolyMatrix build(const std::vector<std::vector<LaurentPoly>>& rows);
  static PolyMatrix build(std::size_t k, std::size_t l, std::vector<LaurentPoly> row_major);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return entries_.front().rank(); }
  const Field& field() const noexcept { return entries_.front().field(); }

  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  const LaurentPoly& entry(std::size_t i, std::size_t j) const { return (*this)(i, j); }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  PolyMatrix(std::size_t k, std::size_t l, std::vector<LaurentPoly> entries)
      : rows_(k), cols_(l), entries_(std::move(entries)) {}

  std::size_t rows_;
  std::size_t cols_;
  std::vector<LaurentPoly> entries_;
};

}  // namespace laurentsys
