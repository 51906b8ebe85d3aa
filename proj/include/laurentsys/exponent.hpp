#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace laurentsys {

/// A lattice point alpha in Z^r; components may be negative.
class Exponent {
 public:
  Exponent() = default;
  Exponent(std::initializer_list<std::int64_t> components) : components_(components) {}
  explicit Exponent(std::vector<std::int64_t> components) : components_(std::move(components)) {}

  static Exponent zero(std::size_t rank) { return Exponent(std::vector<std::int64_t>(rank, 0)); }
  /// The i-th unit vector scaled by `scale`.
  static Exponent unit(std::size_t rank, std::size_t axis, std::int64_t scale = 1);

  std::size_t rank() const noexcept { return components_.size(); }
  std::int64_t operator[](std::size_t i) const { return components_[i]; }
  std::int64_t& operator[](std::size_t i) { return components_[i]; }
  const std::vector<std::int64_t>& components() const noexcept { return components_; }

  bool is_zero() const;

  Exponent& operator+=(const Exponent& rhs);
  Exponent& operator-=(const Exponent& rhs);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  Exponent operator-() const;

  /// Lexicographic order on the component vector.
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

  /// "(a1,a2,...)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> components_;
};

/// Throws RankMismatch when `alpha` does not have `rank` components.
void require_rank(const Exponent& alpha, std::size_t rank);

}  // namespace laurentsys
