#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace laurentsys {

class FieldValue;

enum class FieldKind { rational, prime, real };

/// Descriptor of the coefficient field F. Three instances are supported:
/// the rationals (arbitrary precision), a prime field GF(p), and IEEE
/// doubles compared up to an absolute tolerance.
///
/// Descriptors are small values; two values belong to the same field iff
/// their descriptors compare equal.
class Field {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  static Field rational() { return Field(FieldKind::rational, 0, 0.0); }
  /// Throws InvalidField unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);
  /// Throws InvalidField unless tolerance > 0.
  static Field real(double tolerance = kDefaultTolerance);

  /// Parses `rational`, `gf:<p>`, `float` or `float:<tol>`.
  static Field parse(std::string_view spec);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  double tolerance() const noexcept { return tolerance_; }
  bool is_exact() const noexcept { return kind_ != FieldKind::real; }

  /// Inverse of parse(); parse(to_string()) == *this.
  std::string to_string() const;

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(std::int64_t n) const;
  /// num/den reduced into this field. Throws ZeroDenominator if den == 0 and
  /// DivisionByZero if den vanishes in GF(p).
  FieldValue from_fraction(const mpz_class& num, const mpz_class& den) const;
  FieldValue from_double(double x) const;

  /// Reads a value token: integer, `p/q`, or (float field only) a decimal
  /// such as `0.5`, `-1.25e-3`. Throws BadValueToken, ZeroDenominator or
  /// DecimalInExactField.
  FieldValue parse_value(std::string_view token) const;

  bool operator==(const Field&) const = default;

 private:
  Field(FieldKind kind, std::uint64_t modulus, double tolerance)
      : kind_(kind), modulus_(modulus), tolerance_(tolerance) {}

  FieldKind kind_;
  std::uint64_t modulus_;
  double tolerance_;
};

/// An element of a Field. Values remember their field; arithmetic between
/// different fields throws MixedFieldError.
///
/// Representation invariants: rationals are in lowest terms with positive
/// denominator, residues lie in [0, p).
class FieldValue {
 public:
  const Field& field() const noexcept { return field_; }

  /// Exact zero test for exact kinds, |x| <= tolerance for floats.
  bool is_zero() const;
  bool is_one() const;

  FieldValue operator-() const;
  FieldValue inverse() const;

  FieldValue& operator+=(const FieldValue& rhs);
  FieldValue& operator-=(const FieldValue& rhs);
  FieldValue& operator*=(const FieldValue& rhs);
  FieldValue& operator/=(const FieldValue& rhs);

  friend FieldValue operator+(FieldValue lhs, const FieldValue& rhs) { return lhs += rhs; }
  friend FieldValue operator-(FieldValue lhs, const FieldValue& rhs) { return lhs -= rhs; }
  friend FieldValue operator*(FieldValue lhs, const FieldValue& rhs) { return lhs *= rhs; }
  friend FieldValue operator/(FieldValue lhs, const FieldValue& rhs) { return lhs /= rhs; }

  /// field_eq semantics: exact for exact kinds, within tolerance for floats.
  /// Throws MixedFieldError on operands from different fields.
  friend bool operator==(const FieldValue& a, const FieldValue& b);

  /// True for values whose printed form starts with '-' (rationals and
  /// floats below zero; never for residues).
  bool is_negative() const;

  /// Canonical token: integer or `p/q`, residue in [0,p), or the shortest
  /// round-trip decimal for floats. Field::parse_value reads it back.
  std::string to_string() const;

  // Raw accessors; each throws if the kind does not match.
  const mpq_class& as_rational() const;
  std::uint64_t as_residue() const;
  double as_double() const;

  /// Numeric approximation for any kind (residues map to their
  /// representative in [0,p)).
  double to_double() const;

 private:
  friend class Field;
  using Storage = std::variant<mpq_class, std::uint64_t, double>;

  FieldValue(Field field, Storage value) : field_(field), value_(std::move(value)) {}
  void require_same_field(const FieldValue& rhs) const;

  Field field_;
  Storage value_;
};

inline bool field_eq(const FieldValue& a, const FieldValue& b) { return a == b; }

}  // namespace laurentsys
