#include <gtest/gtest.h>

#include <random>

#include "laurentsys/error.hpp"
#include "laurentsys/laws.hpp"
#include "laurentsys/parser.hpp"

using namespace laurentsys;

namespace {

const Field kQ = Field::rational();

LaurentPoly expected(std::size_t rank, std::initializer_list<std::pair<Exponent, std::int64_t>> terms,
                     const Field& f = kQ) {
  LaurentPoly d(rank, f);
  for (const auto& [a, c] : terms) d.add_term(a, f.from_int(c));
  return d;
}

std::size_t syntax_offset(std::string_view text, std::size_t rank = 1, const Field& f = kQ) {
  try {
    parse_poly(text, rank, f);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no SyntaxError for \"" << text << "\"";
  return 0;
}

}  // namespace

TEST(ParsePoly, Examples) {
  EXPECT_EQ(parse_poly("5*X^-1 - 3*X^2", 1, kQ), expected(1, {{{-1}, 5}, {{2}, -3}}));
  EXPECT_EQ(parse_poly("X1^-1*X2 + 3*X1^2*X2^-2", 2, kQ), expected(2, {{{-1, 1}, 1}, {{2, -2}, 3}}));
  EXPECT_TRUE(parse_poly("X - X", 1, kQ).is_zero());
  EXPECT_TRUE(parse_poly("0", 1, kQ).is_zero());
  EXPECT_EQ(parse_poly("-X", 1, kQ), expected(1, {{{1}, -1}}));
  EXPECT_EQ(parse_poly("  X^0  ", 1, kQ), expected(1, {{{0}, 1}}));
  EXPECT_EQ(parse_poly("X*X", 1, kQ), expected(1, {{{2}, 1}}));
  EXPECT_EQ(parse_poly("X2*X1*X2^-1", 2, kQ), expected(2, {{{1, 0}, 1}}));
  EXPECT_EQ(parse_poly("-3/6*X", 1, kQ).coeff({1}).to_string(), "-1/2");
  EXPECT_EQ(parse_poly("0.5*X^-1 + 0.5*X", 1, Field::real()).coeff({1}).as_double(), 0.5);
  EXPECT_EQ(parse_poly("1e-1", 1, Field::real()).coeff({0}).as_double(), 0.1);
  EXPECT_EQ(parse_poly("8*X", 1, Field::prime(5)).coeff({1}).to_string(), "3");
}

TEST(ParsePoly, Errors) {
  EXPECT_EQ(syntax_offset(""), 0U);
  EXPECT_EQ(syntax_offset("X +"), 3U);
  EXPECT_EQ(syntax_offset("X ^ 2"), 2U);
  EXPECT_EQ(syntax_offset("2*"), 2U);
  EXPECT_EQ(syntax_offset("(X)"), 0U);
  EXPECT_EQ(syntax_offset("X^"), 2U);
  EXPECT_EQ(syntax_offset("X^99999999999999999999"), 2U);
  EXPECT_THROW(parse_poly("X", 2, kQ), VariableIndexOutOfRange);
  EXPECT_THROW(parse_poly("X3", 2, kQ), VariableIndexOutOfRange);
  EXPECT_THROW(parse_poly("X0", 2, kQ), VariableIndexOutOfRange);
  EXPECT_THROW(parse_poly("0.5*X", 1, kQ), DecimalInExactField);
  EXPECT_THROW(parse_poly("0.5*X", 1, Field::prime(3)), DecimalInExactField);
  EXPECT_THROW(parse_poly("1/0*X", 1, kQ), ZeroDenominator);
  EXPECT_THROW(parse_poly("1/3", 1, Field::prime(3)), DivisionByZero);
  try {
    parse_poly("X +", 1, kQ);
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 3"), std::string::npos);
  }
}

TEST(FormatPoly, Examples) {
  EXPECT_EQ(format_poly(expected(1, {{{-1}, 5}, {{2}, -3}})), "5*X^-1 - 3*X^2");
  EXPECT_EQ(format_poly(LaurentPoly(1, kQ)), "0");
  EXPECT_EQ(format_poly(expected(1, {{{0}, 1}, {{1}, -1}})), "1 - X");
  EXPECT_EQ(format_poly(expected(2, {{{-1, 1}, 1}, {{2, -2}, 3}})), "X1^-1*X2 + 3*X1^2*X2^-2");
  EXPECT_EQ(format_poly(parse_poly("1/2*X^-1 + 1/2*X", 1, kQ)), "1/2*X^-1 + 1/2*X");
  EXPECT_EQ(format_poly(parse_poly("0.5*X^-1 + 0.5*X", 1, Field::real())), "0.5*X^-1 + 0.5*X");
}

TEST(FormatPoly, RoundTripRandomized) {
  for (const char* spec : {"rational", "gf:2", "gf:7", "gf:101"}) {
    const Field f = Field::parse(spec);
    for (std::size_t rank = 1; rank <= 3; ++rank) {
      const auto r = parser_roundtrip_suite(f, rank, 500, 42);
      EXPECT_TRUE(r.passed()) << spec << " " << r.counterexample;
    }
    RandomSource rng(f, 1);
    for (int t = 0; t < 500; ++t) {
      const LaurentPoly d = rng.poly(1 + static_cast<std::size_t>(t % 3), 8, 12);
      const std::string text = format_poly(d);
      EXPECT_EQ(parse_poly(text, d.rank(), f), d) << text;
      EXPECT_EQ(format_poly(parse_poly(text, d.rank(), f)), text);
    }
  }
}

TEST(ParsePoly, FuzzOnlyTypedErrors) {
  std::mt19937_64 gen(2024);
  const std::string alphabet = "X0123456789^*+-/. eE()x\t";
  std::size_t parsed = 0;
  for (int t = 0; t < 10000; ++t) {
    std::uniform_int_distribution<std::size_t> len(0, 256);
    std::string text(len(gen), '\0');
    const bool grammar_biased = t % 2 == 0;
    for (auto& ch : text) {
      ch = grammar_biased ? alphabet[gen() % alphabet.size()] : static_cast<char>(gen() & 0xff);
    }
    for (const Field& f : {kQ, Field::real()}) {
      try {
        parse_poly(text, 1 + static_cast<std::size_t>(t % 3), f);
        ++parsed;
      } catch (const Error&) {
      } catch (...) {
        FAIL() << "untyped exception on input #" << t;
      }
    }
  }
  RecordProperty("parsed", static_cast<int>(parsed));
}

TEST(ParseSystem, Examples) {
  const System s = parse_system(
      R"({"rank":1,"field":"rational","k":2,"l":2,"entries":[["X + X^-1","1"],["0","X^-1 - 1"]]})");
  EXPECT_EQ(s.equations(), 2U);
  EXPECT_EQ(s.signals(), 2U);
  EXPECT_EQ(s.matrix()(0, 0), parse_poly("X + X^-1", 1, kQ));
  EXPECT_TRUE(s.matrix()(1, 0).is_zero());

  const System d = parse_system(R"({"rank":1,"field":"gf:2","k":1,"l":1,"entries":[["X - X^-1"]]})");
  EXPECT_EQ(d.field(), Field::prime(2));
  // -1 == 1 in GF(2)
  EXPECT_EQ(d.matrix()(0, 0), parse_poly("X + X^-1", 1, Field::prime(2)));

  EXPECT_EQ(parse_system(format_system(s)).matrix(), s.matrix());
}

TEST(ParseSystem, Errors) {
  EXPECT_THROW(parse_system(R"({"rank":1,"field":"rational","k":2,"l":2,"entries":[["X","1"],["0"]]})"),
               SchemaError);
  EXPECT_THROW(parse_system(R"({"rank":1,"field":"rational","k":1,"l":1})"), SchemaError);
  EXPECT_THROW(parse_system(R"({"rank":0,"field":"rational","k":1,"l":1,"entries":[["X"]]})"), SchemaError);
  EXPECT_THROW(parse_system(R"({"rank":1,"field":"rational","k":1,"l":1,"entries":[[1]]})"), SchemaError);
  EXPECT_THROW(parse_system("not json"), SchemaError);
  EXPECT_THROW(parse_system(R"({"rank":1,"field":"q","k":1,"l":1,"entries":[["X"]]})"), SchemaError);
  try {
    parse_system(R"({"rank":1,"field":"rational","k":1,"l":2,"entries":[["X","X +"]]})");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 1)"), std::string::npos) << e.what();
  }
}
