#include "stagedtrees/ideal.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstdint>

#include "stagedtrees/errors.hpp"

namespace stagedtrees {

bool IdealBasis::is_unit() const noexcept {
  return generators_.size() == 1 && generators_.front().is_one();
}

IdealBasis interreduce(std::span<const Monomial> gens) {
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  // Divisors have degree no larger than their multiples, so checking against
  // already-kept generators in degree order suffices.
  std::sort(sorted.begin(), sorted.end(), graded_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  IdealBasis basis;
  for (const auto& m : sorted) {
    const bool redundant = std::any_of(basis.generators_.begin(), basis.generators_.end(),
                                       [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) basis.generators_.push_back(m);
  }
  std::sort(basis.generators_.begin(), basis.generators_.end());
  return basis;
}

bool operator<(const PrimeComponent& a, const PrimeComponent& b) noexcept {
  if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
  return a.vars < b.vars;
}

namespace {

using Mask = boost::dynamic_bitset<>;

struct Hypergraph {
  std::vector<Indeterminate> vars;  // sorted; bit i is vars[i]
  std::vector<Mask> edges;
};

Hypergraph build_hypergraph(const IdealBasis& basis) {
  if (basis.empty()) throw EmptyBasis("the zero ideal has no minimal primes");
  for (const auto& g : basis.generators()) {
    if (g.is_one()) throw UnitIdeal("the unit ideal has no proper minimal primes");
  }

  Hypergraph h;
  for (const auto& g : basis.generators()) {
    for (const auto& x : g.factors()) h.vars.push_back(x);
  }
  std::sort(h.vars.begin(), h.vars.end());
  h.vars.erase(std::unique(h.vars.begin(), h.vars.end()), h.vars.end());

  for (const auto& g : basis.generators()) {
    Mask edge(h.vars.size());
    for (const auto& x : g.factors()) {
      edge.set(std::lower_bound(h.vars.begin(), h.vars.end(), x) - h.vars.begin());
    }
    h.edges.push_back(std::move(edge));
  }
  return h;
}

PrimeComponent to_component(const Hypergraph& h, const Mask& mask) {
  PrimeComponent p;
  for (auto i = mask.find_first(); i != Mask::npos; i = mask.find_next(i)) {
    p.vars.push_back(h.vars[i]);
  }
  return p;
}

std::vector<PrimeComponent> to_sorted_components(const Hypergraph& h,
                                                 const std::vector<Mask>& masks) {
  std::vector<PrimeComponent> out;
  out.reserve(masks.size());
  for (const auto& m : masks) out.push_back(to_component(h, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Keeps the inclusion-minimal members of `family`.
std::vector<Mask> minimize(std::vector<Mask> family) {
  std::sort(family.begin(), family.end(), [](const Mask& a, const Mask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Mask> kept;
  for (auto& candidate : family) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Mask& k) {
      return k.is_subset_of(candidate);
    });
    if (!dominated) kept.push_back(std::move(candidate));
  }
  return kept;
}

}  // namespace

std::vector<PrimeComponent> minimal_primes(const IdealBasis& basis) {
  Hypergraph h = build_hypergraph(basis);

  std::vector<Mask> edges = h.edges;
  std::sort(edges.begin(), edges.end(), [](const Mask& a, const Mask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  // Berge: extend the minimal transversals of the first k edges to k+1.
  std::vector<Mask> transversals{Mask(h.vars.size())};
  for (const auto& edge : edges) {
    std::vector<Mask> next;
    next.reserve(transversals.size() * 2);
    for (const auto& t : transversals) {
      if (t.intersects(edge)) {
        next.push_back(t);
        continue;
      }
      for (auto i = edge.find_first(); i != Mask::npos; i = edge.find_next(i)) {
        Mask extended = t;
        extended.set(i);
        next.push_back(std::move(extended));
      }
    }
    transversals = minimize(std::move(next));
  }
  return to_sorted_components(h, transversals);
}

std::vector<PrimeComponent> minimal_primes_bruteforce(const IdealBasis& basis) {
  Hypergraph h = build_hypergraph(basis);
  const std::size_t d = h.vars.size();
  if (d > 24) throw DomainError("brute-force minimal primes limited to 24 variables");

  std::vector<std::uint32_t> edges;
  for (const auto& e : h.edges) edges.push_back(static_cast<std::uint32_t>(e.to_ulong()));
  auto covers = [&](std::uint32_t s) {
    return std::all_of(edges.begin(), edges.end(), [s](std::uint32_t e) { return (s & e) != 0; });
  };

  std::vector<Mask> found;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << d); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (std::uint32_t bit = s; bit != 0 && minimal; bit &= bit - 1) {
      if (covers(s & ~(bit & -bit))) minimal = false;
    }
    if (minimal) found.emplace_back(d, s);
  }
  return to_sorted_components(h, found);
}

}  // namespace stagedtrees
