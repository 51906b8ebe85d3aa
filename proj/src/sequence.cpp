#include "laurentsys/sequence.hpp"

#include <limits>
#include <string>

#include "laurentsys/error.hpp"

namespace laurentsys {

namespace {

std::string periods_string(const std::vector<std::int64_t>& periods) {
  return Exponent(periods).to_string();
}

void require_same_periods(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) {
    throw RankMismatch("rank " + std::to_string(a.size()) + " vs rank " + std::to_string(b.size()));
  }
  if (a != b) throw PeriodMismatch("periods " + periods_string(a) + " vs " + periods_string(b));
}

}  // namespace

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::size_t domain_size(const std::vector<std::int64_t>& periods) {
  if (periods.empty()) throw InvalidPeriods("periods must have at least one axis");
  std::size_t size = 1;
  for (auto n : periods) {
    if (n < 1) throw InvalidPeriods("periods must be >= 1, got " + periods_string(periods));
    if (size > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(n)) {
      throw InvalidPeriods("fundamental domain too large for periods " + periods_string(periods));
    }
    size *= static_cast<std::size_t>(n);
  }
  return size;
}

// ------------------------------------------------------------ FiniteSeq

FiniteSeq FiniteSeq::delta(const Exponent& alpha, const Field& field) {
  FiniteSeq w(alpha.rank(), field);
  w.add_term(alpha, field.one());
  return w;
}

FiniteSeq FiniteSeq::from_terms(std::size_t rank, Field field,
                                const std::vector<std::pair<Exponent, FieldValue>>& terms) {
  FiniteSeq w(rank, field);
  for (const auto& [alpha, value] : terms) w.add_term(alpha, value);
  return w;
}

FiniteSeq& FiniteSeq::operator+=(const FiniteSeq& rhs) {
  terms_.add_assign(rhs.terms_);
  return *this;
}

FiniteSeq& FiniteSeq::operator*=(const FieldValue& factor) {
  terms_.scale_assign(factor);
  return *this;
}

FiniteSeq FiniteSeq::operator-() const {
  FiniteSeq w = *this;
  w.terms_.negate();
  return w;
}

// ---------------------------------------------------------- PeriodicSeq

PeriodicSeq::PeriodicSeq(std::vector<std::int64_t> periods, std::vector<FieldValue> values, Field field)
    : periods_(std::move(periods)), values_(std::move(values)), field_(field) {
  const std::size_t expected = laurentsys::domain_size(periods_);
  if (values_.size() != expected) {
    throw DimensionMismatch("periodic sequence with periods " + periods_string(periods_) + " needs " +
                            std::to_string(expected) + " values, got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (!(v.field() == field_)) {
      throw MixedFieldError("value from " + v.field().to_string() + " in " + field_.to_string() + " sequence");
    }
  }
}

PeriodicSeq PeriodicSeq::zero(std::vector<std::int64_t> periods, const Field& field) {
  const std::size_t n = laurentsys::domain_size(periods);
  return PeriodicSeq(std::move(periods), std::vector<FieldValue>(n, field.zero()), field);
}

bool PeriodicSeq::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::size_t PeriodicSeq::flat_index(const Exponent& alpha) const {
  require_rank(alpha, rank());
  std::size_t flat = 0;
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    flat = flat * static_cast<std::size_t>(periods_[i]) + static_cast<std::size_t>(floor_mod(alpha[i], periods_[i]));
  }
  return flat;
}

Exponent PeriodicSeq::domain_point(std::size_t flat) const {
  Exponent beta = Exponent::zero(rank());
  for (std::size_t i = periods_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(periods_[i]);
    beta[i] = static_cast<std::int64_t>(flat % n);
    flat /= n;
  }
  return beta;
}

PeriodicSeq& PeriodicSeq::operator+=(const PeriodicSeq& rhs) {
  require_same_periods(periods_, rhs.periods_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

PeriodicSeq& PeriodicSeq::operator*=(const FieldValue& factor) {
  for (auto& v : values_) v *= factor;
  return *this;
}

PeriodicSeq PeriodicSeq::operator-() const {
  PeriodicSeq w = *this;
  for (auto& v : w.values_) v = -v;
  return w;
}

bool operator==(const PeriodicSeq& a, const PeriodicSeq& b) {
  if (!(a.field_ == b.field_) || a.periods_ != b.periods_) return false;
  for (std::size_t i = 0; i < a.values_.size(); ++i) {
    if (!(a.values_[i] == b.values_[i])) return false;
  }
  return true;
}

// ------------------------------------------------------------- Sequence

std::size_t rank_of(const Sequence& w) {
  return std::visit([](const auto& s) { return s.rank(); }, w);
}

const Field& field_of(const Sequence& w) {
  return std::visit([](const auto& s) -> const Field& { return s.field(); }, w);
}

FieldValue seq_coeff(const Sequence& w, const Exponent& alpha) {
  return std::visit([&](const auto& s) { return s.coeff(alpha); }, w);
}

Sequence seq_add(const Sequence& a, const Sequence& b) {
  if (a.index() != b.index()) {
    throw RepresentationMismatch("cannot add a finite-support and a periodic sequence");
  }
  if (const auto* fa = std::get_if<FiniteSeq>(&a)) return *fa + std::get<FiniteSeq>(b);
  return std::get<PeriodicSeq>(a) + std::get<PeriodicSeq>(b);
}

Sequence seq_scale(const FieldValue& c, const Sequence& w) {
  return std::visit([&](const auto& s) -> Sequence { return c * s; }, w);
}

FiniteSeq to_finite_seq(const LaurentPoly& d) {
  FiniteSeq w(d.rank(), d.field());
  for (const auto& [alpha, value] : d) w.add_term(alpha, value);
  return w;
}

LaurentPoly to_poly(const FiniteSeq& w) {
  LaurentPoly d(w.rank(), w.field());
  for (const auto& [alpha, value] : w) d.add_term(alpha, value);
  return d;
}

PeriodicSeq periodize(const FiniteSeq& w, const std::vector<std::int64_t>& periods) {
  if (periods.size() != w.rank()) {
    throw RankMismatch("periods " + periods_string(periods) + " for a rank-" + std::to_string(w.rank()) +
                       " sequence");
  }
  PeriodicSeq folded = PeriodicSeq::zero(periods, w.field());
  std::vector<FieldValue> values = folded.values();
  for (const auto& [alpha, value] : w) values[folded.flat_index(alpha)] += value;
  return PeriodicSeq(periods, std::move(values), w.field());
}

PeriodicSeq retile(const PeriodicSeq& w, const std::vector<std::int64_t>& periods) {
  if (periods.size() != w.rank()) {
    throw RankMismatch("periods " + periods_string(periods) + " for a rank-" + std::to_string(w.rank()) +
                       " sequence");
  }
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] < 1 || periods[i] % w.periods()[i] != 0) {
      throw PeriodMismatch("periods " + periods_string(periods) + " are not multiples of " +
                           periods_string(w.periods()));
    }
  }
  PeriodicSeq tiled = PeriodicSeq::zero(periods, w.field());
  std::vector<FieldValue> values;
  values.reserve(tiled.domain_size());
  for (std::size_t flat = 0; flat < tiled.domain_size(); ++flat) values.push_back(w.coeff(tiled.domain_point(flat)));
  return PeriodicSeq(periods, std::move(values), w.field());
}

// ------------------------------------------------------------ SeqVector

namespace {

template <class Seq>
void validate_components(const std::vector<Seq>& components) {
  if (components.empty()) throw DimensionMismatch("signal vector must have at least one component");
  const Seq& first = components.front();
  for (const auto& c : components) {
    if (c.rank() != first.rank()) {
      throw RankMismatch("signal components of rank " + std::to_string(first.rank()) + " and " +
                         std::to_string(c.rank()));
    }
    if (!(c.field() == first.field())) {
      throw MixedFieldError("signal components over " + first.field().to_string() + " and " +
                            c.field().to_string());
    }
    if constexpr (std::is_same_v<Seq, PeriodicSeq>) require_same_periods(first.periods(), c.periods());
  }
}

}  // namespace

SeqVector::SeqVector(std::vector<FiniteSeq> components) : components_(std::move(components)) {
  validate_components(std::get<0>(components_));
}

SeqVector::SeqVector(std::vector<PeriodicSeq> components) : components_(std::move(components)) {
  validate_components(std::get<1>(components_));
}

std::size_t SeqVector::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, components_);
}

std::size_t SeqVector::rank() const {
  return std::visit([](const auto& v) { return v.front().rank(); }, components_);
}

const Field& SeqVector::field() const {
  return std::visit([](const auto& v) -> const Field& { return v.front().field(); }, components_);
}

bool SeqVector::is_zero() const {
  return std::visit(
      [](const auto& v) {
        for (const auto& c : v) {
          if (!c.is_zero()) return false;
        }
        return true;
      },
      components_);
}

const std::vector<FiniteSeq>& SeqVector::finite() const {
  if (is_periodic()) throw RepresentationMismatch("signal vector is periodic, not finite-support");
  return std::get<0>(components_);
}

const std::vector<PeriodicSeq>& SeqVector::periodic() const {
  if (!is_periodic()) throw RepresentationMismatch("signal vector is finite-support, not periodic");
  return std::get<1>(components_);
}

}  // namespace laurentsys
