#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "laurentsys/field.hpp"
#include "laurentsys/poly.hpp"
#include "laurentsys/sequence.hpp"

namespace laurentsys {

/// Seeded source of random field elements, polynomials and signals for the
/// executable law suites. Identical (field, seed) pairs replay identically.
class RandomSource {
 public:
  RandomSource(const Field& field, std::uint64_t seed) : field_(field), engine_(seed) {}
  RandomSource(const Field& field, std::seed_seq& seed) : field_(field), engine_(seed) {}

  const Field& field() const noexcept { return field_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Rationals n/d with |n| <= 6, 1 <= d <= 6; uniform residues in GF(p);
  /// small dyadic floats. Zero is possible.
  FieldValue value();
  FieldValue nonzero_value();
  Exponent exponent(std::size_t rank, std::int64_t bound);
  /// Up to `max_terms` terms with exponents in [-bound, bound]^rank.
  LaurentPoly poly(std::size_t rank, std::size_t max_terms = 6, std::int64_t bound = 4);
  FiniteSeq finite_seq(std::size_t rank, std::size_t max_terms = 6, std::int64_t bound = 4);
  /// Periods drawn from 1..max_period on each axis.
  PeriodicSeq periodic_seq(std::size_t rank, std::int64_t max_period);
  Sequence sequence(std::size_t rank, bool periodic);

 private:
  Field field_;
  std::mt19937_64 engine_;
};

enum class SignalKind { finite, periodic };

const char* to_string(SignalKind kind);

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// First failing case, replayable from the seed.
  std::string counterexample;

  bool passed() const noexcept { return failures == 0; }
};

using ShiftImpl = std::function<Sequence(const LaurentPoly&, const Sequence&)>;

/// The shift used by default in the suites.
ShiftImpl library_shift();

/// <c d, W> == <c, d o W> over random (c, d, W). For finite W also checks
/// supp(d o W) is inside supp(W) - supp(d). `shift_impl` lets a test
/// substitute a deliberately broken shift.
SuiteResult adjoint_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                          std::uint64_t seed, const ShiftImpl& shift_impl = library_shift());

/// sigma_c(sigma_d(W)) == sigma_{c d}(W) and sigma_1(W) == W.
SuiteResult module_action_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                                std::uint64_t seed, const ShiftImpl& shift_impl = library_shift());

/// Linearity of the pairing in each argument.
SuiteResult bilinearity_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                              std::uint64_t seed);

/// <X^g, W> == W_g, <d, delta_g> == d_g, the injectivity witness for
/// d1 != d2, and (periodic W) recovery of W from the functional
/// alpha -> <X^alpha, W>.
SuiteResult duality_suite(const Field& field, std::size_t rank, SignalKind kind, std::size_t trials,
                          std::uint64_t seed);

/// to_poly(to_finite_seq(d)) == d and the converse.
SuiteResult isomorphism_suite(const Field& field, std::size_t rank, std::size_t trials, std::uint64_t seed);

/// parse_poly(format_poly(d)) == d.
SuiteResult parser_roundtrip_suite(const Field& field, std::size_t rank, std::size_t trials, std::uint64_t seed);

/// Every suite above for rank 1..3 and both signal kinds. Throws
/// FloatFieldUnsupported for float fields.
std::vector<SuiteResult> run_all_suites(const Field& field, std::size_t trials, std::uint64_t seed);

/// Human-readable rendering used in counterexamples.
std::string describe(const Sequence& w);

}  // namespace laurentsys
