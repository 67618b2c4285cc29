#pragma once

#include <span>
#include <vector>

#include "stagedtrees/monomial.hpp"

namespace stagedtrees {

/// Minimal generating set of a monomial ideal: no generator divides another.
/// Generators are kept in lexicographic order.
class IdealBasis {
 public:
  IdealBasis() = default;

  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  bool empty() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept;

  friend IdealBasis interreduce(std::span<const Monomial> gens);
  friend bool operator==(const IdealBasis&, const IdealBasis&) = default;

 private:
  std::vector<Monomial> generators_;
};

/// Drops duplicates and every generator that is a proper multiple of another.
IdealBasis interreduce(std::span<const Monomial> gens);

/// A prime generated by indeterminates, stored as their sorted set.
struct PrimeComponent {
  std::vector<Indeterminate> vars;

  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

/// Components sort by size, then lexicographically.
bool operator<(const PrimeComponent& a, const PrimeComponent& b) noexcept;

/// Minimal primes of the monomial ideal generated by `basis`, i.e. the
/// minimal transversals of the hypergraph of generator supports. Exponents
/// are ignored, so non-square-free generators are handled through their
/// radicals. Throws EmptyBasis for the zero ideal and UnitIdeal if 1 is a
/// generator.
std::vector<PrimeComponent> minimal_primes(const IdealBasis& basis);

/// Exhaustive subset search over the generators' variables; exponential in
/// the number of variables and capped at 24 of them. Same contract as
/// minimal_primes.
std::vector<PrimeComponent> minimal_primes_bruteforce(const IdealBasis& basis);

}  // namespace stagedtrees
