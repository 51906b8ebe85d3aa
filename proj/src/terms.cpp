#include "laurentsys/terms.hpp"

#include <string>

#include "laurentsys/error.hpp"

namespace laurentsys {

TermMap::TermMap(std::size_t rank, Field field) : rank_(rank), field_(field) {
  if (rank == 0) throw RankMismatch("rank must be at least 1");
}

FieldValue TermMap::coeff(const Exponent& alpha) const {
  require_rank(alpha, rank_);
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? field_.zero() : it->second;
}

void TermMap::accumulate(const Exponent& alpha, const FieldValue& value) {
  require_rank(alpha, rank_);
  require_field(value.field());
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    if (!value.is_zero()) terms_.emplace(alpha, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

void TermMap::add_assign(const TermMap& rhs) {
  require_compatible(rhs);
  for (const auto& [alpha, value] : rhs.terms_) accumulate(alpha, value);
}

void TermMap::scale_assign(const FieldValue& factor) {
  require_field(factor.field());
  if (factor.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= factor;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

void TermMap::negate() {
  for (auto& [alpha, value] : terms_) value = -value;
}

bool TermMap::equals(const TermMap& rhs) const {
  if (rank_ != rhs.rank_ || !(field_ == rhs.field_) || terms_.size() != rhs.terms_.size()) {
    return false;
  }
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || !(a->second == b->second)) return false;
  }
  return true;
}

void TermMap::require_compatible(const TermMap& rhs) const {
  if (rank_ != rhs.rank_) {
    throw RankMismatch("rank " + std::to_string(rank_) + " vs rank " + std::to_string(rhs.rank_));
  }
  require_field(rhs.field_);
}

void TermMap::require_field(const Field& field) const {
  if (!(field_ == field)) {
    throw MixedFieldError("operands from different fields: " + field_.to_string() + " and " +
                          field.to_string());
  }
}

}  // namespace laurentsys
