#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stagedtrees/monomial.hpp"

namespace stagedtrees {

using Coefficient = boost::multiprecision::cpp_int;

/// Polynomial with positive integer coefficients, kept as a sorted
/// monomial -> coefficient map with no zero entries.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  Polynomial() = default;
  static Polynomial one();
  static Polynomial from_monomials(const std::vector<Monomial>& monomials);

  /// Adds `coefficient * m`; a zero coefficient is ignored.
  void add_term(const Monomial& m, const Coefficient& coefficient = 1);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;

  Coefficient coefficient(const Monomial& m) const;

  std::vector<Monomial> support() const;
  bool all_coefficients_one() const;
  std::size_t degree() const;
  std::set<Indeterminate> variables() const;
  bool is_square_free() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text: terms in lexicographic monomial order joined by " + ",
  /// coefficient omitted when it is 1, e.g. "f1*t1 + f2*t1".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Whether multiply_label may raise an exponent.
enum class LabelMode { strict, general };

/// Multiplies every monomial of `f` by `x`. In strict mode a monomial already
/// divisible by `x` raises NonSquareFreeResult.
Polynomial multiply_label(const Indeterminate& x, const Polynomial& f,
                          LabelMode mode = LabelMode::strict);

/// Parses the square-free grammar: terms separated by '+', each an optional
/// positive integer coefficient followed by '*'-separated identifiers; "1" is
/// the unit monomial. Repeated indeterminates raise NonSquareFreeTerm.
Polynomial parse_polynomial(std::string_view text);

/// Same grammar, additionally accepting exponents ("x^2") and repeated factors.
Polynomial parse_polynomial_general(std::string_view text);

/// Parses a single monomial with the general grammar, e.g. "x*y^2" or "1".
Monomial parse_monomial(std::string_view text);

/// Polynomial with real coefficients (network polynomials).
class RealPolynomial {
 public:
  using Terms = std::map<Monomial, double>;

  void add_term(const Monomial& m, double coefficient);
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  double coefficient(const Monomial& m) const;

  /// Like Polynomial::to_string; coefficients use the shortest round-trip form.
  std::string to_string() const;

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  Terms terms_;
};

RealPolynomial to_real(const Polynomial& f);

}  // namespace stagedtrees
