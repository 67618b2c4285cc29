#include "stagedtrees/polynomial.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>

#include "stagedtrees/errors.hpp"

namespace stagedtrees {

Polynomial Polynomial::one() {
  Polynomial p;
  p.add_term(Monomial{});
  return p;
}

Polynomial Polynomial::from_monomials(const std::vector<Monomial>& monomials) {
  Polynomial p;
  for (const auto& m : monomials) p.add_term(m);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) it->second += coefficient;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

bool Polynomial::all_coefficients_one() const {
  for (const auto& [m, c] : terms_) {
    if (c != 1) return false;
  }
  return true;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<Indeterminate> Polynomial::variables() const {
  std::set<Indeterminate> out;
  for (const auto& [m, c] : terms_) out.insert(m.factors().begin(), m.factors().end());
  return out;
}

bool Polynomial::is_square_free() const {
  for (const auto& [m, c] : terms_) {
    if (!m.is_square_free()) return false;
  }
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) {
      out += c.str();
      if (!m.is_one()) out += '*' + m.to_string();
    } else {
      out += m.to_string();
    }
  }
  return out;
}

Polynomial multiply_label(const Indeterminate& x, const Polynomial& f, LabelMode mode) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    if (mode == LabelMode::strict && m.contains(x)) {
      throw NonSquareFreeResult("multiplying " + m.to_string() + " by " + x.name() +
                                " is not square-free");
    }
    out.add_term(m.times(x), c);
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, bool general) : text_(text), general_(general) {}

  Polynomial parse_sum() {
    Polynomial p;
    do {
      auto [m, c] = parse_term();
      p.add_term(m, c);
    } while (accept('+'));
    expect_end();
    return p;
  }

  Monomial parse_single() {
    auto [m, c] = parse_term();
    expect_end();
    if (c != 1) throw SyntaxError(0, "expected a monomial without coefficient");
    return m;
  }

 private:
  std::pair<Monomial, Coefficient> parse_term() {
    skip_space();
    const std::size_t start = pos_;
    Coefficient coefficient = 1;
    std::vector<Indeterminate> factors;

    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coefficient = parse_integer();
      if (!accept('*')) return {Monomial{}, coefficient};
    }
    do {
      skip_space();
      const std::size_t at = pos_;
      Indeterminate x = parse_identifier();
      unsigned power = 1;
      if (accept('^')) {
        skip_space();
        const std::size_t exp_at = pos_;
        Coefficient e = parse_integer();
        if (e > 64) throw SyntaxError(exp_at, "exponent too large");
        power = e.convert_to<unsigned>();
      }
      for (unsigned i = 0; i < power; ++i) {
        if (!general_ && (power > 1 || std::find(factors.begin(), factors.end(), x) != factors.end())) {
          throw NonSquareFreeTerm("term at position " + std::to_string(start) + " repeats " +
                                  x.name() + " (position " + std::to_string(at) + ")");
        }
        factors.push_back(x);
      }
    } while (accept('*'));
    return {Monomial(std::move(factors)), coefficient};
  }

  Coefficient parse_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(start, "expected a positive integer");
    Coefficient value(std::string(text_.substr(start, pos_ - start)));
    if (value == 0) throw SyntaxError(start, "coefficients and exponents must be positive");
    return value;
  }

  Indeterminate parse_identifier() {
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError(start, "expected an identifier");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return Indeterminate(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) {
      throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  bool general_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  return PolynomialParser(text, false).parse_sum();
}

Polynomial parse_polynomial_general(std::string_view text) {
  return PolynomialParser(text, true).parse_sum();
}

Monomial parse_monomial(std::string_view text) {
  return PolynomialParser(text, true).parse_single();
}

void RealPolynomial::add_term(const Monomial& m, double coefficient) {
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second == 0.0) terms_.erase(it);
}

double RealPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

std::string RealPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  char buf[64];
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1.0) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, c);
      out.append(buf, end);
      if (!m.is_one()) out += '*' + m.to_string();
    } else {
      out += m.to_string();
    }
  }
  return out;
}

RealPolynomial to_real(const Polynomial& f) {
  RealPolynomial out;
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.convert_to<double>());
  return out;
}

}  // namespace stagedtrees
