#include <gtest/gtest.h>

#include "laurentsys/error.hpp"
#include "laurentsys/field.hpp"
#include "laurentsys/laws.hpp"

using namespace laurentsys;

TEST(Field, ParseSpecs) {
  EXPECT_EQ(Field::parse("rational"), Field::rational());
  EXPECT_EQ(Field::parse("gf:7"), Field::prime(7));
  EXPECT_EQ(Field::parse("float"), Field::real(1e-9));
  EXPECT_EQ(Field::parse("float:1e-6").tolerance(), 1e-6);
  EXPECT_EQ(Field::parse("gf:7").to_string(), "gf:7");
  EXPECT_EQ(Field::parse(Field::real(1e-6).to_string()), Field::real(1e-6));

  EXPECT_THROW(Field::parse("gf:8"), InvalidField);
  EXPECT_THROW(Field::parse("gf:1"), InvalidField);
  EXPECT_THROW(Field::parse("gf:"), InvalidField);
  EXPECT_THROW(Field::parse("float:0"), InvalidField);
  EXPECT_THROW(Field::parse("float:-1"), InvalidField);
  EXPECT_THROW(Field::parse("complex"), InvalidField);
  EXPECT_THROW(Field::prime(4294967311ULL), InvalidField);  // prime, but above the supported range
}

TEST(Field, RationalArithmetic) {
  const Field q = Field::rational();
  EXPECT_EQ((q.parse_value("1/2") + q.parse_value("1/3")).to_string(), "5/6");
  EXPECT_EQ(q.parse_value("2/4"), q.parse_value("1/2"));
  EXPECT_EQ(q.parse_value("2/4").to_string(), "1/2");
  EXPECT_EQ(q.parse_value("-6/4").to_string(), "-3/2");
  EXPECT_EQ(q.parse_value("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  // leading zeros are decimal digits, not an octal prefix
  EXPECT_EQ(q.parse_value("09").to_string(), "9");
  EXPECT_EQ(q.parse_value("-010/08").to_string(), "-5/4");
  EXPECT_EQ((q.from_int(3) / q.from_int(-6)).to_string(), "-1/2");
  EXPECT_THROW(q.parse_value("0.5"), DecimalInExactField);
  EXPECT_THROW(q.parse_value("1/0"), ZeroDenominator);
  EXPECT_THROW(q.parse_value("abc"), BadValueToken);
  EXPECT_THROW(q.parse_value("1/-2"), BadValueToken);
  EXPECT_THROW(q.zero().inverse(), DivisionByZero);
}

TEST(Field, PrimeArithmetic) {
  const Field f = Field::prime(7);
  EXPECT_EQ((f.from_int(3) * f.from_int(5)).to_string(), "1");
  EXPECT_EQ(f.from_int(-1).to_string(), "6");
  EXPECT_EQ(Field::prime(5).from_int(7), Field::prime(5).from_int(2));
  EXPECT_EQ(f.parse_value("1/2").to_string(), "4");
  EXPECT_THROW(f.parse_value("1/7"), DivisionByZero);
  EXPECT_THROW(f.zero().inverse(), DivisionByZero);
}

TEST(Field, PrimeInverseMatchesScan) {
  // Inverse of 3 in GF(7) by scanning x = 1..6 for 3x == 1 mod 7.
  int scanned = 0;
  for (int x = 1; x < 7; ++x) {
    if ((3 * x) % 7 == 1) scanned = x;
  }
  ASSERT_EQ(scanned, 5);
  EXPECT_EQ(Field::prime(7).from_int(3).inverse().as_residue(), static_cast<std::uint64_t>(scanned));

  for (std::uint64_t p : {2ULL, 3ULL, 13ULL, 65537ULL}) {
    const Field f = Field::prime(p);
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 50); ++a) {
      EXPECT_TRUE((f.from_int(static_cast<std::int64_t>(a)) * f.from_int(static_cast<std::int64_t>(a)).inverse()).is_one());
    }
  }
}

TEST(Field, FloatTolerance) {
  const Field f = Field::real(1e-9);
  EXPECT_EQ(f.parse_value("0.1") + f.parse_value("0.2"), f.parse_value("0.3"));
  EXPECT_FALSE(f.parse_value("0.1") == f.parse_value("0.1000001"));
  EXPECT_TRUE(f.from_double(1e-12).is_zero());
  EXPECT_EQ(f.parse_value("1/4").to_string(), "0.25");
  EXPECT_EQ(f.parse_value("-1.5e-3").to_string(), "-0.0015");
  EXPECT_EQ(f.from_double(-0.0).to_string(), "0");
}

TEST(Field, MixedFieldsRejected) {
  const FieldValue a = Field::prime(7).one();
  const FieldValue b = Field::prime(5).one();
  const FieldValue c = Field::rational().one();
  EXPECT_THROW(a + b, MixedFieldError);
  EXPECT_THROW(a * c, MixedFieldError);
  EXPECT_THROW((void)(a == c), MixedFieldError);
  EXPECT_THROW(Field::real(1e-9).one() + Field::real(1e-6).one(), MixedFieldError);
}

class FieldAxioms : public ::testing::TestWithParam<const char*> {};

TEST_P(FieldAxioms, HoldExactlyOnRandomTriples) {
  const Field field = Field::parse(GetParam());
  RandomSource rng(field, 2024);
  for (int t = 0; t < 1000; ++t) {
    const FieldValue a = rng.value();
    const FieldValue b = rng.value();
    const FieldValue c = rng.value();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + field.zero(), a);
    ASSERT_EQ(a * field.one(), a);
    ASSERT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one());
      ASSERT_EQ(b / a * a, b);
    }
  }
}

TEST_P(FieldAxioms, CanonicalFormIsIdempotent) {
  const Field field = Field::parse(GetParam());
  RandomSource rng(field, 7);
  for (int t = 0; t < 200; ++t) {
    const FieldValue a = rng.value();
    const FieldValue once = field.parse_value(a.to_string());
    const FieldValue twice = field.parse_value(once.to_string());
    ASSERT_EQ(once.to_string(), a.to_string());
    ASSERT_EQ(twice.to_string(), once.to_string());
  }
}

INSTANTIATE_TEST_SUITE_P(ExactFields, FieldAxioms, ::testing::Values("rational", "gf:2", "gf:7", "gf:101"));
