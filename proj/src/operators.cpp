#include "laurentsys/operators.hpp"

#include <string>

#include "laurentsys/error.hpp"

namespace laurentsys {

namespace {

void require_pairable(const LaurentPoly& d, std::size_t rank, const Field& field) {
  if (d.rank() != rank) {
    throw RankMismatch("operator of rank " + std::to_string(d.rank()) + " applied to a rank-" +
                       std::to_string(rank) + " sequence");
  }
  if (!(d.field() == field)) {
    throw MixedFieldError("operator over " + d.field().to_string() + " applied to a sequence over " +
                          field.to_string());
  }
}

}  // namespace

FieldValue scalar_product(const LaurentPoly& d, const FiniteSeq& w) {
  require_pairable(d, w.rank(), w.field());
  FieldValue sum = d.field().zero();
  // Walk the smaller support.
  if (d.term_count() <= w.term_count()) {
    for (const auto& [alpha, coeff] : d) sum += coeff * w.coeff(alpha);
  } else {
    for (const auto& [alpha, value] : w) sum += d.coeff(alpha) * value;
  }
  return sum;
}

FieldValue scalar_product(const LaurentPoly& d, const PeriodicSeq& w) {
  require_pairable(d, w.rank(), w.field());
  FieldValue sum = d.field().zero();
  for (const auto& [alpha, coeff] : d) sum += coeff * w.coeff(alpha);
  return sum;
}

FieldValue scalar_product(const LaurentPoly& d, const Sequence& w) {
  return std::visit([&](const auto& s) { return scalar_product(d, s); }, w);
}

FiniteSeq shift(const LaurentPoly& d, const FiniteSeq& w) {
  require_pairable(d, w.rank(), w.field());
  // Every product d_alpha W_gamma lands at beta = gamma - alpha.
  FiniteSeq out(w.rank(), w.field());
  for (const auto& [alpha, coeff] : d) {
    for (const auto& [gamma, value] : w) out.add_term(gamma - alpha, coeff * value);
  }
  return out;
}

PeriodicSeq shift(const LaurentPoly& d, const PeriodicSeq& w) {
  require_pairable(d, w.rank(), w.field());
  std::vector<FieldValue> values;
  values.reserve(w.domain_size());
  for (std::size_t flat = 0; flat < w.domain_size(); ++flat) {
    const Exponent beta = w.domain_point(flat);
    FieldValue sum = w.field().zero();
    for (const auto& [alpha, coeff] : d) sum += coeff * w.coeff(alpha + beta);
    values.push_back(std::move(sum));
  }
  return PeriodicSeq(w.periods(), std::move(values), w.field());
}

Sequence shift(const LaurentPoly& d, const Sequence& w) {
  return std::visit([&](const auto& s) -> Sequence { return shift(d, s); }, w);
}

namespace {

template <class Seq>
std::vector<Seq> apply_matrix(const PolyMatrix& r, const std::vector<Seq>& w, Seq zero) {
  std::vector<Seq> out;
  out.reserve(r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Seq acc = zero;
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (!r(i, j).is_zero()) acc += shift(r(i, j), w[j]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

SeqVector shift(const PolyMatrix& r, const SeqVector& w) {
  if (r.cols() != w.size()) {
    throw DimensionMismatch("system has " + std::to_string(r.cols()) + " signal components, got " +
                            std::to_string(w.size()));
  }
  require_pairable(r(0, 0), w.rank(), w.field());
  if (w.is_periodic()) {
    const auto& comps = w.periodic();
    return SeqVector(apply_matrix(r, comps, PeriodicSeq::zero(comps.front().periods(), w.field())));
  }
  return SeqVector(apply_matrix(r, w.finite(), FiniteSeq(w.rank(), w.field())));
}

bool check_adjoint(const LaurentPoly& c, const LaurentPoly& d, const Sequence& w) {
  const FieldValue lhs = scalar_product(c * d, w);
  const FieldValue rhs = scalar_product(c, shift(d, w));
  return lhs == rhs;
}

}  // namespace laurentsys
