#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "laurentsys/exponent.hpp"
#include "laurentsys/field.hpp"

namespace laurentsys {

/// Finitely supported map Z^r -> F in canonical sparse form: no stored
/// coefficient is zero (tolerance-aware for floats) and every key has
/// length `rank`. Iteration is ascending lexicographic in the exponent.
///
/// This is the shared storage behind LaurentPoly (elements of D') and
/// FiniteSeq (finite-support elements of A'); the two stay distinct types.
class TermMap {
 public:
  using Map = std::map<Exponent, FieldValue>;
  using const_iterator = Map::const_iterator;

  /// Throws RankMismatch when rank is 0.
  TermMap(std::size_t rank, Field field);

  std::size_t rank() const noexcept { return rank_; }
  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const Map& map() const noexcept { return terms_; }

  /// Stored coefficient or zero.
  FieldValue coeff(const Exponent& alpha) const;
  bool contains(const Exponent& alpha) const { return terms_.count(alpha) != 0; }

  /// terms[alpha] += value, dropping the entry if it cancels.
  void accumulate(const Exponent& alpha, const FieldValue& value);

  void add_assign(const TermMap& rhs);
  void scale_assign(const FieldValue& factor);
  void negate();

  /// Same rank, same field, same support, coefficient-wise field_eq.
  bool equals(const TermMap& rhs) const;

  /// Throws RankMismatch / MixedFieldError when rhs is incompatible.
  void require_compatible(const TermMap& rhs) const;
  void require_field(const Field& field) const;

 private:
  std::size_t rank_;
  Field field_;
  Map terms_;
};

}  // namespace laurentsys
