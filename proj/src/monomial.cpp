#include "stagedtrees/monomial.hpp"

#include <algorithm>
#include <iterator>

namespace stagedtrees {

Monomial::Monomial(std::vector<Indeterminate> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

Monomial::Monomial(std::initializer_list<Indeterminate> factors)
    : Monomial(std::vector<Indeterminate>(factors)) {}

bool Monomial::is_square_free() const noexcept {
  return std::adjacent_find(factors_.begin(), factors_.end()) == factors_.end();
}

bool Monomial::contains(const Indeterminate& x) const noexcept {
  return std::binary_search(factors_.begin(), factors_.end(), x);
}

unsigned Monomial::exponent(const Indeterminate& x) const noexcept {
  auto [lo, hi] = std::equal_range(factors_.begin(), factors_.end(), x);
  return static_cast<unsigned>(hi - lo);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  return std::includes(other.factors_.begin(), other.factors_.end(), factors_.begin(),
                       factors_.end());
}

std::vector<Indeterminate> Monomial::variables() const {
  std::vector<Indeterminate> out;
  std::unique_copy(factors_.begin(), factors_.end(), std::back_inserter(out));
  return out;
}

Monomial Monomial::times(const Indeterminate& x) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + 1);
  auto pos = std::upper_bound(factors_.begin(), factors_.end(), x);
  out.factors_.insert(out.factors_.end(), factors_.begin(), pos);
  out.factors_.push_back(x);
  out.factors_.insert(out.factors_.end(), pos, factors_.end());
  return out;
}

Monomial Monomial::divided_by(const Indeterminate& x) const {
  Monomial out = *this;
  auto pos = std::lower_bound(out.factors_.begin(), out.factors_.end(), x);
  if (pos != out.factors_.end() && *pos == x) out.factors_.erase(pos);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  std::set_intersection(factors_.begin(), factors_.end(), other.factors_.begin(),
                        other.factors_.end(), std::back_inserter(out.factors_));
  return out;
}

Monomial Monomial::radical() const {
  Monomial out;
  out.factors_ = variables();
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (auto it = factors_.begin(); it != factors_.end();) {
    auto next = std::find_if(it, factors_.end(), [&](const Indeterminate& y) { return y != *it; });
    if (!out.empty()) out += '*';
    out += it->name();
    if (const auto power = next - it; power > 1) {
      out += '^';
      out += std::to_string(power);
    }
    it = next;
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                b.factors_.begin(), b.factors_.end());
}

bool graded_less(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a < b;
}

}  // namespace stagedtrees
