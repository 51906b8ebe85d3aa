#include <gtest/gtest.h>

#include "laurentsys/error.hpp"
#include "laurentsys/laws.hpp"
#include "laurentsys/operators.hpp"
#include "laurentsys/parser.hpp"
#include "oracles.hpp"

using namespace laurentsys;

namespace {

const Field kQ = Field::rational();

LaurentPoly P(const char* text, const Field& field = kQ, std::size_t rank = 1) {
  return parse_poly(text, rank, field);
}

FiniteSeq seq1(std::initializer_list<std::pair<std::int64_t, const char*>> terms, const Field& f = kQ) {
  FiniteSeq w(1, f);
  for (auto [k, v] : terms) w.add_term({k}, f.parse_value(v));
  return w;
}

PeriodicSeq periodic1(std::vector<std::int64_t> values, const Field& f = kQ) {
  std::vector<FieldValue> vs;
  for (auto v : values) vs.push_back(f.from_int(v));
  const auto n = static_cast<std::int64_t>(vs.size());
  return PeriodicSeq({n}, std::move(vs), f);
}

}  // namespace

TEST(ScalarProduct, WorkedExamples) {
  EXPECT_EQ(scalar_product(P("X^-1 + 2*X^2"), seq1({{-1, "3"}, {2, "4"}})).to_string(), "11");
  EXPECT_EQ(scalar_product(P("X^-1 + X"), to_finite_seq(P("X^-1 + 2*X"))).to_string(), "3");
  EXPECT_TRUE(scalar_product(P("0"), seq1({{-1, "3"}})).is_zero());
  EXPECT_TRUE(scalar_product(P("X^-1 + X"), FiniteSeq(1, kQ)).is_zero());
  EXPECT_EQ(scalar_product(P("X^-1 + X"), periodic1({5, 7})).to_string(), "14");
}

TEST(ScalarProduct, Errors) {
  EXPECT_THROW(scalar_product(P("X1", kQ, 2), FiniteSeq(1, kQ)), RankMismatch);
  EXPECT_THROW(scalar_product(P("X"), FiniteSeq(1, Field::prime(5))), MixedFieldError);
}

TEST(Shift, MonomialXShiftsLeft) {
  const FiniteSeq w = seq1({{-2, "1"}, {0, "5"}, {3, "-2"}});
  const FiniteSeq out = shift(P("X"), w);
  for (std::int64_t k = -5; k <= 5; ++k) EXPECT_EQ(out.coeff({k}), w.coeff({k + 1})) << k;
  EXPECT_EQ(shift(P("1"), w), w);
}

TEST(Shift, BidirectionalAverageMatchesDefiningSum) {
  // Input W_{-1..1} = 1, 2, 3 and kernel 0.5 X^-1 + 0.5 X. Expected values
  // come from the defining sum evaluated on k in [-4, 4].
  for (const char* spec : {"rational", "float"}) {
    const Field field = Field::parse(spec);
    const LaurentPoly kernel = P(field.is_exact() ? "1/2*X^-1 + 1/2*X" : "0.5*X^-1 + 0.5*X", field);
    const FiniteSeq w = seq1({{-1, "1"}, {0, "2"}, {1, "3"}}, field);
    const FiniteSeq out = shift(kernel, w);
    FiniteSeq expected(1, field);
    for (std::int64_t k = -4; k <= 4; ++k) {
      expected.add_term({k}, oracle::shift_coeff(kernel, Sequence(w), {k}, 1));
    }
    EXPECT_EQ(out, expected);
    EXPECT_EQ(out.coeff({-2}), field.from_fraction(1, 2));
    EXPECT_EQ(out.coeff({-1}), field.from_int(1));
    EXPECT_EQ(out.coeff({0}), field.from_int(2));
    EXPECT_EQ(out.coeff({1}), field.from_int(1));
    EXPECT_EQ(out.coeff({2}), field.from_fraction(3, 2));
  }
}

TEST(Shift, Periodic) {
  EXPECT_TRUE(shift(P("X - X^-1"), periodic1({1, 0})).is_zero());
  RandomSource rng(kQ, 3);
  for (int t = 0; t < 20; ++t) {
    const PeriodicSeq w = periodic1({rng.integer(-5, 5), rng.integer(-5, 5)});
    EXPECT_TRUE(shift(P("X^2 - 1"), w).is_zero());
  }
  EXPECT_EQ(shift(P("X"), periodic1({1, 2, 3})), periodic1({2, 3, 1}));
  EXPECT_EQ(shift(P("X^-1"), periodic1({1, 2, 3})), periodic1({3, 1, 2}));
}

TEST(Shift, MatchesBruteForceRandomized) {
  for (const char* spec : {"rational", "gf:7"}) {
    const Field field = Field::parse(spec);
    RandomSource rng(field, 11);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rank = 1 + static_cast<std::size_t>(t % 2);
      const LaurentPoly d = rng.poly(rank, 4, 2);
      const Sequence w = rng.sequence(rank, t % 3 == 0);
      const Sequence out = shift(d, w);
      oracle::for_each_point(rank, -5, 5, [&](const Exponent& beta) {
        ASSERT_EQ(seq_coeff(out, beta), oracle::shift_coeff(d, w, beta, 2)) << beta.to_string();
      });
    }
  }
}

TEST(Shift, Matrix) {
  const PolyMatrix diff = PolyMatrix::build({{P("X - X^-1")}});
  const SeqVector delta(std::vector<FiniteSeq>{FiniteSeq::delta({0}, kQ)});
  const FiniteSeq out = shift(diff, delta).finite().front();
  for (std::int64_t b = -3; b <= 3; ++b) {
    const FieldValue brute = oracle::shift_coeff(diff(0, 0), Sequence(FiniteSeq::delta({0}, kQ)), {b}, 1);
    EXPECT_EQ(out.coeff({b}), brute) << b;
  }
  EXPECT_EQ(out.coeff({-1}).to_string(), "1");
  EXPECT_EQ(out.coeff({1}).to_string(), "-1");
  EXPECT_EQ(out.term_count(), 2U);

  const PolyMatrix two = PolyMatrix::build({{P("X + X^-1"), P("1")}, {P("0"), P("X^-1 - 1")}});
  const SeqVector zeros(std::vector<FiniteSeq>{FiniteSeq(1, kQ), FiniteSeq(1, kQ)});
  EXPECT_TRUE(shift(two, zeros).is_zero());
  EXPECT_EQ(shift(two, zeros).size(), 2U);

  const SeqVector w(std::vector<FiniteSeq>{seq1({{0, "4"}, {3, "1"}})});
  EXPECT_EQ(shift(PolyMatrix::build({{P("1")}}), w), w);

  EXPECT_THROW(shift(two, w), DimensionMismatch);
}

TEST(Adjoint, MonomialPairs) {
  RandomSource rng(kQ, 8);
  for (int t = 0; t < 50; ++t) {
    const Exponent a = rng.exponent(2, 4);
    const Exponent b = rng.exponent(2, 4);
    const Sequence w = rng.sequence(2, t % 2 == 0);
    const LaurentPoly xa = LaurentPoly::monomial(kQ, a);
    const LaurentPoly xb = LaurentPoly::monomial(kQ, b);
    EXPECT_EQ(scalar_product(xa * xb, w), seq_coeff(w, a + b));
    EXPECT_EQ(scalar_product(xa, shift(xb, w)), seq_coeff(w, a + b));
    EXPECT_TRUE(check_adjoint(xa, xb, w));
    // c = 1 reduces to <d, W> = (d o W)_0
    EXPECT_EQ(scalar_product(xb, w), seq_coeff(shift(xb, w), Exponent::zero(2)));
  }
}

TEST(Laws, SuitesPassOverExactFields) {
  for (const char* spec : {"rational", "gf:7"}) {
    const Field field = Field::parse(spec);
    for (const auto& r : run_all_suites(field, 100, 42)) {
      EXPECT_TRUE(r.passed()) << r.name << ": " << r.counterexample;
      EXPECT_EQ(r.trials, 100U);
    }
  }
  EXPECT_THROW(run_all_suites(Field::real(), 10, 1), FloatFieldUnsupported);
}

TEST(Laws, SuitesAreDeterministic) {
  const auto a = adjoint_suite(Field::prime(7), 2, SignalKind::finite, 50, 9);
  const auto b = adjoint_suite(Field::prime(7), 2, SignalKind::finite, 50, 9);
  EXPECT_EQ(a.name, b.name);
  EXPECT_EQ(a.failures, b.failures);
}

// Mutation check: a convolution-style shift (alpha - beta instead of
// alpha + beta) must be caught by the adjoint suite.
TEST(Laws, SignFlippedShiftIsDetected) {
  const ShiftImpl flipped = [](const LaurentPoly& d, const Sequence& w) -> Sequence {
    LaurentPoly mirrored(d.rank(), d.field());
    for (const auto& [alpha, c] : d) mirrored.add_term(-alpha, c);
    return shift(mirrored, w);
  };
  for (auto kind : {SignalKind::finite, SignalKind::periodic}) {
    const auto r = adjoint_suite(Field::prime(7), 1, kind, 200, 42, flipped);
    EXPECT_FALSE(r.passed());
    EXPECT_NE(r.counterexample.find("seed=42"), std::string::npos);
  }
  const auto r = module_action_suite(Field::rational(), 1, SignalKind::finite, 200, 42, flipped);
  EXPECT_TRUE(r.passed());  // sigma is still an action, just the wrong one
}
