#include "laurentsys/poly.hpp"

#include <string>

#include "laurentsys/error.hpp"

namespace laurentsys {

LaurentPoly LaurentPoly::monomial(const Exponent& alpha, const FieldValue& coeff) {
  LaurentPoly p(alpha.rank(), coeff.field());
  p.add_term(alpha, coeff);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const FieldValue& c) {
  return monomial(Exponent::zero(rank), c);
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank, Field field,
                                    const std::vector<std::pair<Exponent, FieldValue>>& terms) {
  LaurentPoly p(rank, field);
  for (const auto& [alpha, value] : terms) p.add_term(alpha, value);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  terms_.add_assign(rhs.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const FieldValue& factor) {
  terms_.scale_assign(factor);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  p.terms_.negate();
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.terms_.require_compatible(b.terms_);
  LaurentPoly product(a.rank(), a.field());
  for (const auto& [alpha, x] : a.terms_) {
    for (const auto& [beta, y] : b.terms_) product.terms_.accumulate(alpha + beta, x * y);
  }
  return product;
}

PolyMatrix PolyMatrix::build(const std::vector<std::vector<LaurentPoly>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionMismatch("matrix must be at least 1x1");
  const std::size_t l = rows.front().size();
  std::vector<LaurentPoly> flat;
  flat.reserve(rows.size() * l);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != l) {
      throw RaggedMatrix("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                         " entries, expected " + std::to_string(l));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return build(rows.size(), l, std::move(flat));
}

PolyMatrix PolyMatrix::build(std::size_t k, std::size_t l, std::vector<LaurentPoly> row_major) {
  if (k == 0 || l == 0) throw DimensionMismatch("matrix must be at least 1x1");
  if (row_major.size() != k * l) {
    throw RaggedMatrix("expected " + std::to_string(k * l) + " entries, got " +
                       std::to_string(row_major.size()));
  }
  const LaurentPoly& first = row_major.front();
  for (const auto& p : row_major) first.terms().require_compatible(p.terms());
  return PolyMatrix(k, l, std::move(row_major));
}

}  // namespace laurentsys
