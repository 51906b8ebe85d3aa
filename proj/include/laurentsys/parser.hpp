#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "laurentsys/field.hpp"
#include "laurentsys/poly.hpp"
#include "laurentsys/system.hpp"

namespace laurentsys {

/// Parses a flat sum of terms such as `5*X^-1 - 3*X^2` or
/// `X1^-1*X2 + 3*X1^2*X2^-2`:
///
///   poly   := ws term (ws ('+'|'-') ws term)* ws
///   term   := coeff ('*' mono)? | mono
///   mono   := factor ('*' factor)*
///   factor := var ('^' sint)?
///   var    := 'X' digits?          bare X only when rank == 1
///   coeff  := sint | sint '/' digits | decimal
///
/// A '-' before the first term is folded into its coefficient. Decimals
/// are only accepted over the float field. Like terms are combined.
///
/// Errors carry the 0-based byte offset: SyntaxError,
/// VariableIndexOutOfRange, DecimalInExactField, ZeroDenominator (and
/// DivisionByZero for a fraction whose denominator vanishes in GF(p)).
LaurentPoly parse_poly(std::string_view text, std::size_t rank, const Field& field);

/// Inverse of parse_poly: terms in ascending lexicographic exponent order,
/// unit coefficients elided, `0` for the zero polynomial.
std::string format_poly(const LaurentPoly& d);

/// Reads {"rank", "field", "k", "l", "entries"} where entries is a k x l grid
/// of polynomial strings. Throws SchemaError, or a parse_poly error with the
/// offending (row, col) prepended.
System parse_system(std::string_view json_text);

/// The document parse_system reads.
std::string format_system(const System& s);

}  // namespace laurentsys
