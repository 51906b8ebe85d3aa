#include "laurentsys/exponent.hpp"

#include "laurentsys/error.hpp"

namespace laurentsys {

Exponent Exponent::unit(std::size_t rank, std::size_t axis, std::int64_t scale) {
  Exponent e = zero(rank);
  e.components_.at(axis) = scale;
  return e;
}

bool Exponent::is_zero() const {
  for (auto c : components_) {
    if (c != 0) return false;
  }
  return true;
}

Exponent& Exponent::operator+=(const Exponent& rhs) {
  require_rank(rhs, rank());
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& rhs) {
  require_rank(rhs, rank());
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

Exponent Exponent::operator-() const {
  Exponent e = *this;
  for (auto& c : e.components_) c = -c;
  return e;
}

std::string Exponent::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(components_[i]);
  }
  return out + ")";
}

void require_rank(const Exponent& alpha, std::size_t rank) {
  if (alpha.rank() != rank) {
    throw RankMismatch("index " + alpha.to_string() + " has " + std::to_string(alpha.rank()) +
                       " components, expected " + std::to_string(rank));
  }
}

}  // namespace laurentsys
