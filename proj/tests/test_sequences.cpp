#include <gtest/gtest.h>

#include "laurentsys/error.hpp"
#include "laurentsys/laws.hpp"
#include "laurentsys/sequence.hpp"

using namespace laurentsys;

namespace {

const Field kQ = Field::rational();

FiniteSeq seq1(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms, const Field& f = kQ) {
  FiniteSeq w(1, f);
  for (auto [k, v] : terms) w.add_term({k}, f.from_int(v));
  return w;
}

PeriodicSeq periodic1(std::vector<std::int64_t> values, const Field& f = kQ) {
  std::vector<FieldValue> vs;
  for (auto v : values) vs.push_back(f.from_int(v));
  const auto n = static_cast<std::int64_t>(vs.size());
  return PeriodicSeq({n}, std::move(vs), f);
}

}  // namespace

TEST(Sequences, FiniteCoefficients) {
  const FiniteSeq w = seq1({{-1, 1}, {0, 2}, {1, 3}});
  EXPECT_EQ(w.coeff({0}).to_string(), "2");
  EXPECT_EQ(w.coeff({-1}).to_string(), "1");
  EXPECT_TRUE(w.coeff({5}).is_zero());
  EXPECT_THROW(w.coeff({0, 0}), RankMismatch);
}

TEST(Sequences, PeriodicCoefficientsFoldNegativeIndices) {
  const PeriodicSeq even = periodic1({1, 0});
  EXPECT_EQ(even.coeff({-4}).to_string(), "1");
  EXPECT_EQ(even.coeff({-3}).to_string(), "0");
  EXPECT_EQ(even.coeff({7}).to_string(), "0");
  EXPECT_EQ(floor_mod(-1, 3), 2);
  EXPECT_EQ(floor_mod(-6, 3), 0);
}

TEST(Sequences, PeriodicLayoutIsRowMajor) {
  std::vector<FieldValue> vs;
  for (int i = 0; i < 6; ++i) vs.push_back(kQ.from_int(i));
  const PeriodicSeq w({2, 3}, vs, kQ);
  EXPECT_EQ(w.coeff({1, 0}).to_string(), "3");  // axis 2 fastest
  EXPECT_EQ(w.coeff({0, 2}).to_string(), "2");
  EXPECT_EQ(w.coeff({-1, -1}).to_string(), "5");
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(w.flat_index(w.domain_point(i)), i);

  EXPECT_THROW(PeriodicSeq({2, 3}, std::vector<FieldValue>(5, kQ.zero()), kQ), DimensionMismatch);
  EXPECT_THROW(PeriodicSeq({0}, {}, kQ), InvalidPeriods);
  EXPECT_THROW(PeriodicSeq({}, {}, kQ), InvalidPeriods);
}

TEST(Sequences, PeriodicityLawRandomized) {
  RandomSource rng(Field::prime(7), 5);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rank = 1 + static_cast<std::size_t>(t % 3);
    const PeriodicSeq w = rng.periodic_seq(rank, 5);
    const Exponent alpha = rng.exponent(rank, 50);
    for (std::size_t i = 0; i < rank; ++i) {
      ASSERT_EQ(w.coeff(alpha), w.coeff(alpha + Exponent::unit(rank, i, w.periods()[i])));
      ASSERT_EQ(w.coeff(alpha), w.coeff(alpha - Exponent::unit(rank, i, 3 * w.periods()[i])));
    }
    const Exponent folded = w.domain_point(w.flat_index(alpha));
    for (std::size_t i = 0; i < rank; ++i) {
      ASSERT_GE(folded[i], 0);
      ASSERT_LT(folded[i], w.periods()[i]);
    }
  }
}

TEST(Sequences, IsomorphismRoundTrips) {
  const Exponent alpha{3, -2};
  const FiniteSeq delta = to_finite_seq(LaurentPoly::monomial(kQ, alpha));
  EXPECT_EQ(delta, FiniteSeq::delta(alpha, kQ));
  EXPECT_EQ(delta.term_count(), 1U);
  EXPECT_TRUE(to_finite_seq(LaurentPoly(2, kQ)).is_zero());

  for (const char* spec : {"rational", "gf:7"}) {
    RandomSource rng(Field::parse(spec), 17);
    for (int t = 0; t < 500; ++t) {
      const std::size_t rank = 1 + static_cast<std::size_t>(t % 3);
      const LaurentPoly d = rng.poly(rank);
      const FiniteSeq w = rng.finite_seq(rank);
      ASSERT_EQ(to_poly(to_finite_seq(d)), d);
      ASSERT_EQ(to_finite_seq(to_poly(w)), w);
      ASSERT_EQ(to_finite_seq(d).terms().map().size(), d.term_count());
    }
  }
}

TEST(Sequences, Arithmetic) {
  const FiniteSeq d0 = FiniteSeq::delta({0}, kQ);
  EXPECT_EQ(d0 + d0, kQ.from_int(2) * d0);
  const FiniteSeq w = seq1({{-1, 1}, {4, -2}});
  EXPECT_TRUE((w + kQ.from_int(-1) * w).is_zero());

  EXPECT_EQ(periodic1({1, 2}) + periodic1({10, 20}), periodic1({11, 22}));
  EXPECT_THROW(periodic1({1, 2}) + periodic1({1, 2, 3}), PeriodMismatch);
  EXPECT_THROW(w + FiniteSeq::delta({0, 0}, kQ), RankMismatch);
  EXPECT_THROW(w + seq1({{0, 1}}, Field::prime(3)), MixedFieldError);
  EXPECT_THROW(seq_add(Sequence(w), Sequence(periodic1({1}))), RepresentationMismatch);
  EXPECT_EQ(std::get<PeriodicSeq>(seq_add(Sequence(periodic1({1, 2})), Sequence(periodic1({3, 4})))),
            periodic1({4, 6}));
}

TEST(Sequences, Periodize) {
  EXPECT_EQ(periodize(FiniteSeq::delta({3}, kQ), {2}), periodic1({0, 1}));
  EXPECT_EQ(periodize(FiniteSeq::delta({-1}, kQ), {2}), periodic1({0, 1}));
  EXPECT_EQ(periodize(seq1({{0, 1}, {2, 1}}), {2}), periodic1({2, 0}));
  EXPECT_THROW(periodize(FiniteSeq::delta({0}, kQ), {2, 2}), RankMismatch);
  EXPECT_THROW(periodize(FiniteSeq::delta({0}, kQ), {0}), InvalidPeriods);
}

TEST(Sequences, Retile) {
  const PeriodicSeq w = periodic1({1, 2, 3});
  const PeriodicSeq wide = retile(w, {6});
  EXPECT_EQ(wide, periodic1({1, 2, 3, 1, 2, 3}));
  EXPECT_THROW(retile(w, {4}), PeriodMismatch);
}

TEST(SeqVector, Validation) {
  EXPECT_THROW(SeqVector(std::vector<FiniteSeq>{}), DimensionMismatch);
  EXPECT_THROW(SeqVector(std::vector<PeriodicSeq>{periodic1({1, 2}), periodic1({1})}), PeriodMismatch);
  EXPECT_THROW(SeqVector(std::vector<FiniteSeq>{FiniteSeq(1, kQ), FiniteSeq(2, kQ)}), RankMismatch);
  const SeqVector v(std::vector<FiniteSeq>{FiniteSeq(1, kQ)});
  EXPECT_TRUE(v.is_zero());
  EXPECT_THROW(v.periodic(), RepresentationMismatch);
}
