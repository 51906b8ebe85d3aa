#include "laurentsys/field.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "laurentsys/error.hpp"

namespace laurentsys {

namespace {

__extension__ using uint128 = unsigned __int128;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_signed_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

// sint ('.' digits)? ([eE] sint)? with at least one of the optional parts.
bool is_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  const std::size_t int_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == int_start) return false;
  bool decorated = false;
  if (i < s.size() && s[i] == '.') {
    ++i;
    const std::size_t frac_start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == frac_start) return false;
    decorated = true;
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    const std::size_t exp_start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == exp_start) return false;
    decorated = true;
  }
  return decorated && i == s.size();
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U)) {
    throw InvalidField("prime modulus must be below 2^32, got " + std::to_string(p));
  }
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  return Field(FieldKind::prime, p, 0.0);
}

Field Field::real(double tolerance) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InvalidField("float tolerance must be a positive finite number");
  }
  return Field(FieldKind::real, 0, tolerance);
}

Field Field::parse(std::string_view spec) {
  if (spec == "rational") return rational();
  if (spec.substr(0, 3) == "gf:") {
    const std::string_view digits = spec.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (!all_digits(digits) || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw InvalidField("bad prime modulus in field spec '" + std::string(spec) + "'");
    }
    return prime(p);
  }
  if (spec == "float") return real();
  if (spec.substr(0, 6) == "float:") {
    const std::string_view tol_text = spec.substr(6);
    double tol = 0.0;
    auto [ptr, ec] = std::from_chars(tol_text.data(), tol_text.data() + tol_text.size(), tol);
    if (tol_text.empty() || ec != std::errc{} || ptr != tol_text.data() + tol_text.size()) {
      throw InvalidField("bad tolerance in field spec '" + std::string(spec) + "'");
    }
    return real(tol);
  }
  throw InvalidField("unknown field '" + std::string(spec) + "' (expected rational, gf:<p>, float[:<tol>])");
}

std::string Field::to_string() const {
  switch (kind_) {
    case FieldKind::rational:
      return "rational";
    case FieldKind::prime:
      return "gf:" + std::to_string(modulus_);
    case FieldKind::real: {
      if (tolerance_ == kDefaultTolerance) return "float";
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, tolerance_);
      return "float:" + std::string(buf, ptr);
    }
  }
  return {};
}

FieldValue Field::zero() const { return from_int(0); }

FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(std::int64_t n) const {
  switch (kind_) {
    case FieldKind::rational:
      return FieldValue(*this, mpq_class(mpz_class(static_cast<long>(n))));
    case FieldKind::prime:
      return FieldValue(*this, reduce(mpz_class(static_cast<long>(n)), modulus_));
    case FieldKind::real:
      return FieldValue(*this, static_cast<double>(n));
  }
  throw InvalidField("corrupt field descriptor");
}

FieldValue Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw ZeroDenominator("zero denominator");
  switch (kind_) {
    case FieldKind::rational: {
      mpq_class q(num, den);
      q.canonicalize();
      return FieldValue(*this, std::move(q));
    }
    case FieldKind::prime: {
      const std::uint64_t d = reduce(den, modulus_);
      if (d == 0) {
        throw DivisionByZero("denominator " + den.get_str() + " vanishes in GF(" +
                             std::to_string(modulus_) + ")");
      }
      return FieldValue(*this, mod_mul(reduce(num, modulus_), mod_pow(d, modulus_ - 2, modulus_), modulus_));
    }
    case FieldKind::real:
      return FieldValue(*this, mpq_class(num, den).get_d());
  }
  throw InvalidField("corrupt field descriptor");
}

FieldValue Field::from_double(double x) const {
  if (kind_ != FieldKind::real) {
    throw DecimalInExactField("floating-point value in exact field " + to_string());
  }
  return FieldValue(*this, x);
}

FieldValue Field::parse_value(std::string_view token) const {
  const auto slash = token.find('/');
  if (slash != std::string_view::npos) {
    const std::string_view num = token.substr(0, slash);
    const std::string_view den = token.substr(slash + 1);
    if (!is_signed_integer(num) || !all_digits(den)) {
      throw BadValueToken("bad fraction '" + std::string(token) + "'");
    }
    return from_fraction(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  }
  if (is_signed_integer(token)) {
    return from_fraction(mpz_class(std::string(token), 10), mpz_class(1));
  }
  if (is_decimal(token)) {
    if (kind_ != FieldKind::real) {
      throw DecimalInExactField("decimal '" + std::string(token) + "' in exact field " + to_string());
    }
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw BadValueToken("bad decimal '" + std::string(token) + "'");
    }
    return FieldValue(*this, x);
  }
  throw BadValueToken("bad value token '" + std::string(token) + "'");
}

// ----------------------------------------------------------- FieldValue

void FieldValue::require_same_field(const FieldValue& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw MixedFieldError("operands from different fields: " + field_.to_string() + " and " +
                          rhs.field_.to_string());
  }
}

bool FieldValue::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return std::get<mpq_class>(value_) == 0;
    case FieldKind::prime:
      return std::get<std::uint64_t>(value_) == 0;
    case FieldKind::real:
      return std::abs(std::get<double>(value_)) <= field_.tolerance();
  }
  return false;
}

bool FieldValue::is_one() const { return *this == field_.one(); }

bool FieldValue::is_negative() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return sgn(std::get<mpq_class>(value_)) < 0;
    case FieldKind::prime:
      return false;
    case FieldKind::real:
      return std::get<double>(value_) < 0.0;
  }
  return false;
}

FieldValue FieldValue::operator-() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return FieldValue(field_, mpq_class(-std::get<mpq_class>(value_)));
    case FieldKind::prime: {
      const std::uint64_t v = std::get<std::uint64_t>(value_);
      return FieldValue(field_, v == 0 ? 0 : field_.modulus() - v);
    }
    case FieldKind::real:
      return FieldValue(field_, -std::get<double>(value_));
  }
  return *this;
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.to_string());
  switch (field_.kind()) {
    case FieldKind::rational: {
      mpq_class q = 1 / std::get<mpq_class>(value_);
      q.canonicalize();
      return FieldValue(field_, std::move(q));
    }
    case FieldKind::prime: {
      const std::uint64_t p = field_.modulus();
      return FieldValue(field_, mod_pow(std::get<std::uint64_t>(value_), p - 2, p));
    }
    case FieldKind::real:
      return FieldValue(field_, 1.0 / std::get<double>(value_));
  }
  return *this;
}

FieldValue& FieldValue::operator+=(const FieldValue& rhs) {
  require_same_field(rhs);
  switch (field_.kind()) {
    case FieldKind::rational:
      std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
      break;
    case FieldKind::prime: {
      const std::uint64_t p = field_.modulus();
      auto& v = std::get<std::uint64_t>(value_);
      v = (v + std::get<std::uint64_t>(rhs.value_)) % p;
      break;
    }
    case FieldKind::real:
      std::get<double>(value_) += std::get<double>(rhs.value_);
      break;
  }
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& rhs) { return *this += -rhs; }

FieldValue& FieldValue::operator*=(const FieldValue& rhs) {
  require_same_field(rhs);
  switch (field_.kind()) {
    case FieldKind::rational:
      std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
      break;
    case FieldKind::prime: {
      auto& v = std::get<std::uint64_t>(value_);
      v = mod_mul(v, std::get<std::uint64_t>(rhs.value_), field_.modulus());
      break;
    }
    case FieldKind::real:
      std::get<double>(value_) *= std::get<double>(rhs.value_);
      break;
  }
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  a.require_same_field(b);
  switch (a.field_.kind()) {
    case FieldKind::rational:
      return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    case FieldKind::prime:
      return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
    case FieldKind::real:
      return std::abs(std::get<double>(a.value_) - std::get<double>(b.value_)) <= a.field_.tolerance();
  }
  return false;
}

std::string FieldValue::to_string() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return std::get<mpq_class>(value_).get_str();
    case FieldKind::prime:
      return std::to_string(std::get<std::uint64_t>(value_));
    case FieldKind::real: {
      double x = std::get<double>(value_);
      if (x == 0.0) x = 0.0;  // drop the sign of -0
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
      return std::string(buf, ptr);
    }
  }
  return {};
}

const mpq_class& FieldValue::as_rational() const {
  if (field_.kind() != FieldKind::rational) throw MixedFieldError("not a rational value");
  return std::get<mpq_class>(value_);
}

std::uint64_t FieldValue::as_residue() const {
  if (field_.kind() != FieldKind::prime) throw MixedFieldError("not a prime-field value");
  return std::get<std::uint64_t>(value_);
}

double FieldValue::as_double() const {
  if (field_.kind() != FieldKind::real) throw MixedFieldError("not a float value");
  return std::get<double>(value_);
}

double FieldValue::to_double() const {
  switch (field_.kind()) {
    case FieldKind::rational:
      return std::get<mpq_class>(value_).get_d();
    case FieldKind::prime:
      return static_cast<double>(std::get<std::uint64_t>(value_));
    case FieldKind::real:
      return std::get<double>(value_);
  }
  return 0.0;
}

}  // namespace laurentsys
