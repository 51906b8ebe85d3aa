#include "laurentsys/parser.hpp"

#include <charconv>
#include <optional>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "laurentsys/error.hpp"

namespace laurentsys {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t rank, const Field& field)
      : text_(text), rank_(rank), field_(field), result_(rank, field) {}

  LaurentPoly run() {
    skip_ws();
    term(/*negate=*/false, /*first=*/true);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      ++pos_;
      skip_ws();
      term(c == '-', /*first=*/false);
    }
    return std::move(result_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void skip_ws() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw SyntaxError(pos_, expected + ", found " + found);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void term(bool negate, bool first) {
    std::optional<FieldValue> coeff;
    bool folded_minus = false;
    if (first && peek() == '-' && peek(1) == 'X') {
      folded_minus = true;
      ++pos_;
    }
    if (is_digit(peek()) || (peek() == '-' && is_digit(peek(1)))) {
      coeff = coefficient();
      if (peek() != '*') {
        finish_term(*coeff, Exponent::zero(rank_), negate);
        return;
      }
      ++pos_;
      if (peek() != 'X') fail("expected variable after '*'");
    } else if (peek() != 'X') {
      fail("expected coefficient or variable");
    }
    const Exponent alpha = monomial();
    FieldValue value = coeff ? *coeff : field_.one();
    if (folded_minus) value = -value;
    finish_term(value, alpha, negate);
  }

  void finish_term(const FieldValue& value, const Exponent& alpha, bool negate) {
    result_.add_term(alpha, negate ? -value : value);
  }

  FieldValue coefficient() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      if (digits().empty()) fail("expected denominator digits");
    } else {
      if (peek() == '.') {
        ++pos_;
        if (digits().empty()) fail("expected digits after '.'");
      }
      if (peek() == 'e' || peek() == 'E') {
        ++pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        if (digits().empty()) fail("expected exponent digits");
      }
    }
    const std::string_view token = text_.substr(start, pos_ - start);
    try {
      return field_.parse_value(token);
    } catch (const Error& e) {
      e.rethrow_with_context("coefficient at offset " + std::to_string(start));
    }
  }

  Exponent monomial() {
    Exponent alpha = Exponent::zero(rank_);
    factor(alpha);
    while (peek() == '*') {
      ++pos_;
      if (peek() != 'X') fail("expected variable after '*'");
      factor(alpha);
    }
    return alpha;
  }

  void factor(Exponent& alpha) {
    const std::size_t start = pos_;
    ++pos_;  // 'X'
    const std::string_view index_text = digits();
    std::size_t axis = 0;
    if (index_text.empty()) {
      if (rank_ != 1) {
        throw VariableIndexOutOfRange("bare 'X' at offset " + std::to_string(start) + " needs rank 1, rank is " +
                                      std::to_string(rank_));
      }
    } else {
      std::size_t index = 0;
      auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
      if (ec != std::errc{} || index == 0 || index > rank_) {
        throw VariableIndexOutOfRange("variable 'X" + std::string(index_text) + "' at offset " +
                                      std::to_string(start) + " outside X1..X" + std::to_string(rank_));
      }
      axis = index - 1;
    }
    std::int64_t power = 1;
    if (peek() == '^') {
      ++pos_;
      const std::size_t power_start = pos_;
      if (peek() == '-') ++pos_;
      if (digits().empty()) fail("expected integer exponent");
      const std::string_view power_text = text_.substr(power_start, pos_ - power_start);
      auto [ptr, ec] = std::from_chars(power_text.data(), power_text.data() + power_text.size(), power);
      if (ec != std::errc{}) throw SyntaxError(power_start, "exponent out of range");
    }
    if (__builtin_add_overflow(alpha[axis], power, &alpha[axis])) {
      throw SyntaxError(start, "exponent out of range");
    }
  }

  std::string_view text_;
  std::size_t rank_;
  Field field_;
  LaurentPoly result_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Exponent& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.rank(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'X';
    if (alpha.rank() > 1) out += std::to_string(i + 1);
    if (alpha[i] != 1) out += '^' + std::to_string(alpha[i]);
  }
  return out;
}

bool exactly_one(const FieldValue& v) {
  return v.field().is_exact() ? v.is_one() : v.as_double() == 1.0;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::size_t rank, const Field& field) {
  return PolyParser(text, rank, field).run();
}

std::string format_poly(const LaurentPoly& d) {
  if (d.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, coeff] : d) {
    const bool negative = coeff.is_negative();
    const FieldValue magnitude = negative ? -coeff : coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = format_monomial(alpha);
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (exactly_one(magnitude)) {
      out += mono;
    } else {
      out += magnitude.to_string() + '*' + mono;
    }
    first = false;
  }
  return out;
}

System parse_system(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("system document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("system document must be a JSON object");
  auto positive = [&](const char* key) -> std::size_t {
    if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<std::uint64_t>() == 0) {
      throw SchemaError(std::string("'") + key + "' must be a positive integer");
    }
    return doc[key].get<std::size_t>();
  };
  const std::size_t rank = positive("rank");
  const std::size_t k = positive("k");
  const std::size_t l = positive("l");
  if (!doc.contains("field") || !doc["field"].is_string()) throw SchemaError("'field' must be a string");
  Field field = Field::rational();
  try {
    field = Field::parse(doc["field"].get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(std::string("'field': ") + e.what());
  }
  const json& entries = doc.contains("entries") ? doc["entries"] : json();
  if (!entries.is_array() || entries.size() != k) {
    throw SchemaError("'entries' must be an array of k = " + std::to_string(k) + " rows");
  }
  std::vector<LaurentPoly> flat;
  for (std::size_t i = 0; i < k; ++i) {
    if (!entries[i].is_array() || entries[i].size() != l) {
      throw SchemaError("entries row " + std::to_string(i) + " must have l = " + std::to_string(l) + " entries");
    }
    for (std::size_t j = 0; j < l; ++j) {
      if (!entries[i][j].is_string()) {
        throw SchemaError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") must be a string");
      }
      try {
        flat.push_back(parse_poly(entries[i][j].get<std::string>(), rank, field));
      } catch (const Error& e) {
        e.rethrow_with_context("entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  return System(PolyMatrix::build(k, l, std::move(flat)));
}

std::string format_system(const System& s) {
  nlohmann::ordered_json doc;
  doc["rank"] = s.rank();
  doc["field"] = s.field().to_string();
  doc["k"] = s.equations();
  doc["l"] = s.signals();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.equations(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < s.signals(); ++j) row.push_back(format_poly(s.matrix()(i, j)));
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

}  // namespace laurentsys
