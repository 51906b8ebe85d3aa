#include "laurentsys/laws.hpp"

#include <sstream>

#include "laurentsys/error.hpp"
#include "laurentsys/operators.hpp"
#include "laurentsys/parser.hpp"

namespace laurentsys {

// ----------------------------------------------------------- RandomSource

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

FieldValue RandomSource::value() {
  switch (field_.kind()) {
    case FieldKind::rational:
      return field_.from_fraction(mpz_class(static_cast<long>(integer(-6, 6))),
                                  mpz_class(static_cast<long>(integer(1, 6))));
    case FieldKind::prime:
      return field_.from_int(integer(0, static_cast<std::int64_t>(field_.modulus()) - 1));
    case FieldKind::real:
      return field_.from_double(static_cast<double>(integer(-8, 8)) / 4.0);
  }
  return field_.zero();
}

FieldValue RandomSource::nonzero_value() {
  while (true) {
    FieldValue v = value();
    if (!v.is_zero()) return v;
  }
}

Exponent RandomSource::exponent(std::size_t rank, std::int64_t bound) {
  Exponent e = Exponent::zero(rank);
  for (std::size_t i = 0; i < rank; ++i) e[i] = integer(-bound, bound);
  return e;
}

LaurentPoly RandomSource::poly(std::size_t rank, std::size_t max_terms, std::int64_t bound) {
  LaurentPoly p(rank, field_);
  const auto n = integer(0, static_cast<std::int64_t>(max_terms));
  for (std::int64_t t = 0; t < n; ++t) p.add_term(exponent(rank, bound), nonzero_value());
  return p;
}

FiniteSeq RandomSource::finite_seq(std::size_t rank, std::size_t max_terms, std::int64_t bound) {
  return to_finite_seq(poly(rank, max_terms, bound));
}

PeriodicSeq RandomSource::periodic_seq(std::size_t rank, std::int64_t max_period) {
  std::vector<std::int64_t> periods(rank);
  for (auto& n : periods) n = integer(1, max_period);
  std::vector<FieldValue> values;
  const std::size_t d = domain_size(periods);
  values.reserve(d);
  for (std::size_t i = 0; i < d; ++i) values.push_back(value());
  return PeriodicSeq(std::move(periods), std::move(values), field_);
}

Sequence RandomSource::sequence(std::size_t rank, bool periodic) {
  if (!periodic) return finite_seq(rank);
  const std::int64_t max_period = rank == 1 ? 6 : rank == 2 ? 4 : 3;
  return periodic_seq(rank, max_period);
}

// ---------------------------------------------------------------- suites

const char* to_string(SignalKind kind) { return kind == SignalKind::finite ? "finite" : "periodic"; }

ShiftImpl library_shift() {
  return [](const LaurentPoly& d, const Sequence& w) { return shift(d, w); };
}

std::string describe(const Sequence& w) {
  std::ostringstream out;
  if (const auto* f = std::get_if<FiniteSeq>(&w)) {
    out << "finite{";
    bool first = true;
    for (const auto& [alpha, value] : *f) {
      out << (first ? "" : ", ") << alpha.to_string() << ":" << value.to_string();
      first = false;
    }
    out << "}";
  } else {
    const auto& p = std::get<PeriodicSeq>(w);
    out << "periodic" << Exponent(p.periods()).to_string() << "[";
    for (std::size_t i = 0; i < p.values().size(); ++i) out << (i ? "," : "") << p.values()[i].to_string();
    out << "]";
  }
  return out.str();
}

namespace {

enum class SuiteId : std::uint32_t { adjoint = 1, module_action, bilinearity, duality, isomorphism, parser };

RandomSource make_source(const Field& field, std::uint64_t seed, SuiteId id, std::size_t rank, SignalKind kind) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(rank),
                    static_cast<std::uint32_t>(kind)};
  return RandomSource(field, seq);
}

std::string suite_name(const char* base, const Field& field, std::size_t rank, const char* kind) {
  std::string name = std::string(base) + " [" + field.to_string() + ", r=" + std::to_string(rank);
  if (kind != nullptr) name += std::string(", ") + kind;
  return name + "]";
}

void record_failure(SuiteResult& result, std::uint64_t seed, std::size_t trial, const std::string& detail) {
  if (result.failures++ == 0) {
    result.counterexample = "seed=" + std::to_string(seed) + " trial=" + std::to_string(trial) + " " + detail;
  }
}

bool sequences_equal(const Sequence& a, const Sequence& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<FiniteSeq>(&a)) return *fa == std::get<FiniteSeq>(b);
  return std::get<PeriodicSeq>(a) == std::get<PeriodicSeq>(b);
}

// supp(d o W) must lie in { gamma - alpha : alpha in supp d, gamma in supp W }.
bool within_support_bound(const LaurentPoly& d, const FiniteSeq& w, const FiniteSeq& shifted) {
  for (const auto& [beta, value] : shifted) {
    bool reachable = false;
    for (const auto& [alpha, coeff] : d) {
      if (w.terms().contains(alpha + beta)) {
        reachable = true;
        break;
      }
    }
    if (!reachable) return false;
  }
  return true;
}

void require_exact(const Field& field) {
  if (!field.is_exact()) {
    throw FloatFieldUnsupported("law suites run over exact fields only, got " + field.to_string());
  }
}

}  // namespace

SuiteResult adjoint_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                          std::uint64_t seed, const ShiftImpl& shift_impl) {
  require_exact(field);
  RandomSource rng = make_source(field, seed, SuiteId::adjoint, rank, kind);
  SuiteResult result{suite_name("adjoint <cd,W> = <c,d o W>", field, rank, to_string(kind)), trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const LaurentPoly c = rng.poly(rank);
    const LaurentPoly d = rng.poly(rank);
    const Sequence w = rng.sequence(rank, kind == SignalKind::periodic);
    const Sequence shifted = shift_impl(d, w);
    const FieldValue lhs = scalar_product(c * d, w);
    const FieldValue rhs = scalar_product(c, shifted);
    bool ok = lhs == rhs;
    if (ok && kind == SignalKind::finite) {
      ok = within_support_bound(d, std::get<FiniteSeq>(w), std::get<FiniteSeq>(shifted));
    }
    if (!ok) {
      record_failure(result, seed, t,
                     "c=" + format_poly(c) + " d=" + format_poly(d) + " W=" + describe(w) + " <cd,W>=" +
                         lhs.to_string() + " <c,d o W>=" + rhs.to_string());
    }
  }
  return result;
}

SuiteResult module_action_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                                std::uint64_t seed, const ShiftImpl& shift_impl) {
  require_exact(field);
  RandomSource rng = make_source(field, seed, SuiteId::module_action, rank, kind);
  SuiteResult result{suite_name("module action sigma_c sigma_d = sigma_cd", field, rank, to_string(kind)), trials,
                     0, {}};
  const LaurentPoly one = LaurentPoly::constant(rank, field.one());
  for (std::size_t t = 0; t < trials; ++t) {
    const LaurentPoly c = rng.poly(rank);
    const LaurentPoly d = rng.poly(rank);
    const Sequence w = rng.sequence(rank, kind == SignalKind::periodic);
    const bool composed = sequences_equal(shift_impl(c, shift_impl(d, w)), shift_impl(c * d, w));
    const bool identity = sequences_equal(shift_impl(one, w), w);
    if (!composed || !identity) {
      record_failure(result, seed, t,
                     std::string(composed ? "sigma_1 != id" : "sigma_c sigma_d != sigma_cd") + " c=" + format_poly(c) +
                         " d=" + format_poly(d) + " W=" + describe(w));
    }
  }
  return result;
}

SuiteResult bilinearity_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                              std::uint64_t seed) {
  require_exact(field);
  RandomSource rng = make_source(field, seed, SuiteId::bilinearity, rank, kind);
  SuiteResult result{suite_name("bilinearity of <.,.>", field, rank, to_string(kind)), trials, 0, {}};
  const bool periodic = kind == SignalKind::periodic;
  for (std::size_t t = 0; t < trials; ++t) {
    const FieldValue a = rng.value();
    const FieldValue b = rng.value();
    const LaurentPoly d1 = rng.poly(rank);
    const LaurentPoly d2 = rng.poly(rank);
    const Sequence w1 = rng.sequence(rank, periodic);
    // the second signal must share the representation (and periods) of the first
    Sequence w2 = w1;
    if (periodic) {
      const auto& p = std::get<PeriodicSeq>(w1);
      std::vector<FieldValue> values;
      for (std::size_t i = 0; i < p.domain_size(); ++i) values.push_back(rng.value());
      w2 = PeriodicSeq(p.periods(), std::move(values), field);
    } else {
      w2 = rng.finite_seq(rank);
    }
    const bool left = scalar_product(a * d1 + b * d2, w1) ==
                      a * scalar_product(d1, w1) + b * scalar_product(d2, w1);
    const bool right = scalar_product(d1, seq_add(seq_scale(a, w1), seq_scale(b, w2))) ==
                       a * scalar_product(d1, w1) + b * scalar_product(d1, w2);
    if (!left || !right) {
      record_failure(result, seed, t,
                     std::string(left ? "right" : "left") + " linearity a=" + a.to_string() + " b=" + b.to_string() +
                         " d1=" + format_poly(d1) + " d2=" + format_poly(d2) + " W1=" + describe(w1) +
                         " W2=" + describe(w2));
    }
  }
  return result;
}

SuiteResult duality_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                          std::uint64_t seed) {
  require_exact(field);
  RandomSource rng = make_source(field, seed, SuiteId::duality, rank, kind);
  SuiteResult result{suite_name("duality extraction <X^g,W> = W_g", field, rank, to_string(kind)), trials, 0, {}};
  const bool periodic = kind == SignalKind::periodic;
  for (std::size_t t = 0; t < trials; ++t) {
    const Sequence w = rng.sequence(rank, periodic);
    const LaurentPoly d = rng.poly(rank);
    const Exponent gamma = rng.exponent(rank, 6);

    std::string failure;
    if (!(scalar_product(LaurentPoly::monomial(field, gamma), w) == seq_coeff(w, gamma))) {
      failure = "<X^g,W> != W_g";
    } else if (!(scalar_product(d, FiniteSeq::delta(gamma, field)) == d.coeff(gamma))) {
      failure = "<d,delta_g> != d_g";
    } else {
      // A second polynomial differing from d; some gamma in the support of
      // the difference separates them.
      const LaurentPoly other = d + LaurentPoly::monomial(rng.exponent(rank, 4), rng.nonzero_value());
      const LaurentPoly diff = d - other;
      const Exponent witness = diff.begin()->first;
      const FiniteSeq probe = FiniteSeq::delta(witness, field);
      if (scalar_product(d, probe) == scalar_product(other, probe)) failure = "no injectivity witness";
    }
    if (failure.empty() && periodic) {
      // Rebuild W from the functional alpha -> <X^alpha, W>.
      const auto& p = std::get<PeriodicSeq>(w);
      std::vector<FieldValue> values;
      for (std::size_t i = 0; i < p.domain_size(); ++i) {
        values.push_back(scalar_product(LaurentPoly::monomial(field, p.domain_point(i)), w));
      }
      if (!(PeriodicSeq(p.periods(), std::move(values), field) == p)) failure = "W not recovered from functional";
    }
    if (!failure.empty()) {
      record_failure(result, seed, t,
                     failure + " d=" + format_poly(d) + " g=" + gamma.to_string() + " W=" + describe(w));
    }
  }
  return result;
}

SuiteResult isomorphism_suite(const Field& field, std::size_t rank, std::size_t trials, std::uint64_t seed) {
  RandomSource rng = make_source(field, seed, SuiteId::isomorphism, rank, SignalKind::finite);
  SuiteResult result{suite_name("isomorphism X^a <-> delta_a", field, rank, nullptr), trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const LaurentPoly d = rng.poly(rank);
    const FiniteSeq w = rng.finite_seq(rank);
    const FiniteSeq dw = to_finite_seq(d);
    bool ok = to_poly(dw) == d && to_finite_seq(to_poly(w)) == w;
    for (const auto& [alpha, value] : d) ok = ok && dw.coeff(alpha) == value;
    if (!ok) {
      record_failure(result, seed, t, "d=" + format_poly(d) + " W=" + describe(w));
    }
  }
  return result;
}

SuiteResult parser_roundtrip_suite(const Field& field, std::size_t rank, std::size_t trials, std::uint64_t seed) {
  RandomSource rng = make_source(field, seed, SuiteId::parser, rank, SignalKind::finite);
  SuiteResult result{suite_name("parse(format(d)) = d", field, rank, nullptr), trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const LaurentPoly d = rng.poly(rank, 8, 12);
    const std::string text = format_poly(d);
    std::string failure;
    try {
      if (!(parse_poly(text, rank, field) == d)) failure = "mismatch";
    } catch (const Error& e) {
      failure = e.what();
    }
    if (!failure.empty()) record_failure(result, seed, t, failure + " text=\"" + text + "\"");
  }
  return result;
}

std::vector<SuiteResult> run_all_suites(const Field& field, std::size_t trials, std::uint64_t seed) {
  std::vector<SuiteResult> results;
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (SignalKind kind : {SignalKind::finite, SignalKind::periodic}) {
      results.push_back(adjoint_suite(field, rank, kind, trials, seed));
      results.push_back(module_action_suite(field, rank, kind, trials, seed));
      results.push_back(bilinearity_suite(field, rank, kind, trials, seed));
      results.push_back(duality_suite(field, rank, kind, trials, seed));
    }
    results.push_back(isomorphism_suite(field, rank, trials, seed));
    results.push_back(parser_roundtrip_suite(field, rank, trials, seed));
  }
  return results;
}

}  // namespace laurentsys
