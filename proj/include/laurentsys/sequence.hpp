#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "laurentsys/exponent.hpp"
#include "laurentsys/field.hpp"
#include "laurentsys/poly.hpp"
#include "laurentsys/terms.hpp"

namespace laurentsys {

/// Finite-support signal W(Y) = sum W_alpha Y^alpha. The single-term
/// sequence at alpha is the Kronecker delta delta_alpha.
class FiniteSeq {
 public:
  FiniteSeq(std::size_t rank, Field field) : terms_(rank, field) {}

  static FiniteSeq delta(const Exponent& alpha, const Field& field);
  static FiniteSeq from_terms(std::size_t rank, Field field,
                              const std::vector<std::pair<Exponent, FieldValue>>& terms);

  std::size_t rank() const noexcept { return terms_.rank(); }
  const Field& field() const noexcept { return terms_.field(); }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  FieldValue coeff(const Exponent& alpha) const { return terms_.coeff(alpha); }
  void add_term(const Exponent& alpha, const FieldValue& value) { terms_.accumulate(alpha, value); }

  FiniteSeq& operator+=(const FiniteSeq& rhs);
  FiniteSeq& operator*=(const FieldValue& factor);
  friend FiniteSeq operator+(FiniteSeq a, const FiniteSeq& b) { return a += b; }
  friend FiniteSeq operator*(const FieldValue& c, FiniteSeq a) { return a *= c; }
  FiniteSeq operator-() const;

  friend bool operator==(const FiniteSeq& a, const FiniteSeq& b) { return a.terms_.equals(b.terms_); }

 private:
  TermMap terms_;
};

/// Lattice-periodic signal: W_alpha = values[alpha mod (N_1..N_r)], with the
/// fundamental domain [0,N_1) x ... x [0,N_r) stored row-major (axis 1
/// slowest, axis r fastest).
class PeriodicSeq {
 public:
  /// Throws InvalidPeriods (empty or some N_i < 1), DimensionMismatch
  /// (values length != prod N_i), MixedFieldError.
  PeriodicSeq(std::vector<std::int64_t> periods, std::vector<FieldValue> values, Field field);

  static PeriodicSeq zero(std::vector<std::int64_t> periods, const Field& field);

  std::size_t rank() const noexcept { return periods_.size(); }
  const Field& field() const noexcept { return field_; }
  const std::vector<std::int64_t>& periods() const noexcept { return periods_; }
  const std::vector<FieldValue>& values() const noexcept { return values_; }
  std::size_t domain_size() const noexcept { return values_.size(); }
  bool is_zero() const;

  /// values[alpha mod periods]; negative components fold into [0, N_i).
  FieldValue coeff(const Exponent& alpha) const { return values_[flat_index(alpha)]; }
  std::size_t flat_index(const Exponent& alpha) const;
  /// Inverse of flat_index restricted to the fundamental domain.
  Exponent domain_point(std::size_t flat) const;

  PeriodicSeq& operator+=(const PeriodicSeq& rhs);
  PeriodicSeq& operator*=(const FieldValue& factor);
  friend PeriodicSeq operator+(PeriodicSeq a, const PeriodicSeq& b) { return a += b; }
  friend PeriodicSeq operator*(const FieldValue& c, PeriodicSeq a) { return a *= c; }
  PeriodicSeq operator-() const;

  friend bool operator==(const PeriodicSeq& a, const PeriodicSeq& b);

 private:
  std::vector<std::int64_t> periods_;
  std::vector<FieldValue> values_;
  Field field_;
};

/// Number of points in the fundamental domain; throws InvalidPeriods.
std::size_t domain_size(const std::vector<std::int64_t>& periods);
/// Floor modulus, always in [0, n).
std::int64_t floor_mod(std::int64_t a, std::int64_t n);

using Sequence = std::variant<FiniteSeq, PeriodicSeq>;

std::size_t rank_of(const Sequence& w);
const Field& field_of(const Sequence& w);
FieldValue seq_coeff(const Sequence& w, const Exponent& alpha);
/// Throws RepresentationMismatch when the alternatives differ, and the
/// per-representation errors otherwise.
Sequence seq_add(const Sequence& a, const Sequence& b);
Sequence seq_scale(const FieldValue& c, const Sequence& w);

/// d(X) -> the sequence with the same coefficients (X^alpha <-> delta_alpha).
FiniteSeq to_finite_seq(const LaurentPoly& d);
/// Inverse of to_finite_seq.
LaurentPoly to_poly(const FiniteSeq& w);

/// Folds a finite sequence onto a period lattice:
/// values[beta] = sum over alpha == beta (mod periods) of W_alpha.
PeriodicSeq periodize(const FiniteSeq& w, const std::vector<std::int64_t>& periods);

/// Re-expresses w on a coarser lattice whose periods are multiples of
/// w's periods (the sequence itself is unchanged). Throws PeriodMismatch.
PeriodicSeq retile(const PeriodicSeq& w, const std::vector<std::int64_t>& periods);

/// A vector (W_1, ..., W_l) of signals, all finite or all periodic with
/// identical periods, sharing rank and field.
class SeqVector {
 public:
  explicit SeqVector(std::vector<FiniteSeq> components);
  explicit SeqVector(std::vector<PeriodicSeq> components);

  std::size_t size() const noexcept;
  bool is_periodic() const noexcept { return std::holds_alternative<std::vector<PeriodicSeq>>(components_); }
  std::size_t rank() const;
  const Field& field() const;
  bool is_zero() const;

  /// Throw RepresentationMismatch if the other representation is held.
  const std::vector<FiniteSeq>& finite() const;
  const std::vector<PeriodicSeq>& periodic() const;

  friend bool operator==(const SeqVector&, const SeqVector&) = default;

 private:
  std::variant<std::vector<FiniteSeq>, std::vector<PeriodicSeq>> components_;
};

}  // namespace laurentsys
