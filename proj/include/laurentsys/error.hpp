#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <utility>

namespace laurentsys {

/// Root of every error the library throws. Each concrete error is its own
/// type so callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}

  const char* what() const noexcept override { return message_.c_str(); }

  /// Rethrows a copy of the dynamic type with `context` prepended to the
  /// message.
  [[noreturn]] void rethrow_with_context(const std::string& context) const {
    throw_with_context(context);
    std::abort();
  }

 protected:
  virtual void throw_with_context(const std::string& context) const = 0;

  void prepend(const std::string& context) { message_ = context + ": " + message_; }

 private:
  std::string message_;
};

template <class Derived, class Base = Error>
class ErrorOf : public Base {
 public:
  using Base::Base;

  void throw_with_context(const std::string& context) const override {
    Derived copy(static_cast<const Derived&>(*this));
    copy.prepend(context);
    throw copy;
  }
};

// fields
class InvalidField : public ErrorOf<InvalidField> { using ErrorOf::ErrorOf; };
class MixedFieldError : public ErrorOf<MixedFieldError> { using ErrorOf::ErrorOf; };
class DivisionByZero : public ErrorOf<DivisionByZero> { using ErrorOf::ErrorOf; };

// shapes
class RankMismatch : public ErrorOf<RankMismatch> { using ErrorOf::ErrorOf; };
class DimensionMismatch : public ErrorOf<DimensionMismatch> { using ErrorOf::ErrorOf; };
class RaggedMatrix : public ErrorOf<RaggedMatrix> { using ErrorOf::ErrorOf; };
class RepresentationMismatch : public ErrorOf<RepresentationMismatch> { using ErrorOf::ErrorOf; };
class PeriodMismatch : public ErrorOf<PeriodMismatch> { using ErrorOf::ErrorOf; };
class InvalidPeriods : public ErrorOf<InvalidPeriods> { using ErrorOf::ErrorOf; };
class FloatFieldUnsupported : public ErrorOf<FloatFieldUnsupported> { using ErrorOf::ErrorOf; };

// text input
class SyntaxError : public ErrorOf<SyntaxError> {
 public:
  SyntaxError(std::size_t offset, std::string message)
      : ErrorOf("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};
class VariableIndexOutOfRange : public ErrorOf<VariableIndexOutOfRange> { using ErrorOf::ErrorOf; };
class DecimalInExactField : public ErrorOf<DecimalInExactField> { using ErrorOf::ErrorOf; };
class ZeroDenominator : public ErrorOf<ZeroDenominator> { using ErrorOf::ErrorOf; };
class SchemaError : public ErrorOf<SchemaError> { using ErrorOf::ErrorOf; };

// files
class IoError : public ErrorOf<IoError> { using ErrorOf::ErrorOf; };
class DuplicateIndex : public ErrorOf<DuplicateIndex> { using ErrorOf::ErrorOf; };
class BadValueToken : public ErrorOf<BadValueToken> { using ErrorOf::ErrorOf; };
class BadMagic : public ErrorOf<BadMagic> { using ErrorOf::ErrorOf; };
class TruncatedPixelData : public ErrorOf<TruncatedPixelData> { using ErrorOf::ErrorOf; };

}  // namespace laurentsys
