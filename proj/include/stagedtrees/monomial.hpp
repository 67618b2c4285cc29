#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "stagedtrees/symbol.hpp"

namespace stagedtrees {

/// A power-product stored as the sorted multiset of its indeterminates, so
/// x^2*y is {x, x, y}. Square-free monomials (the common case) have strictly
/// increasing factors; the empty multiset is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Indeterminate> factors);
  Monomial(std::initializer_list<Indeterminate> factors);

  const std::vector<Indeterminate>& factors() const noexcept { return factors_; }
  std::size_t degree() const noexcept { return factors_.size(); }
  bool is_one() const noexcept { return factors_.empty(); }
  bool is_square_free() const noexcept;

  bool contains(const Indeterminate& x) const noexcept;
  unsigned exponent(const Indeterminate& x) const noexcept;

  /// Multiset inclusion: this divides `other`.
  bool divides(const Monomial& other) const noexcept;

  /// Distinct indeterminates (the radical's support).
  std::vector<Indeterminate> variables() const;

  Monomial times(const Indeterminate& x) const;
  /// Removes one factor x. Precondition: contains(x).
  Monomial divided_by(const Indeterminate& x) const;
  Monomial gcd(const Monomial& other) const;
  Monomial radical() const;

  /// "1", "x", "x*y", "x^2*y".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on the sorted factor sequence; 1 sorts first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<Indeterminate> factors_;
};

/// Degree first, then lexicographic.
bool graded_less(const Monomial& a, const Monomial& b) noexcept;

}  // namespace stagedtrees

template <>
struct std::hash<stagedtrees::Monomial> {
  std::size_t operator()(const stagedtrees::Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& x : m.factors()) {
      h ^= std::hash<stagedtrees::Indeterminate>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
