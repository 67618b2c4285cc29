#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stagedtrees/ideal.hpp"
#include "stagedtrees/polynomial.hpp"
#include "stagedtrees/tree.hpp"

namespace stagedtrees {

/// A set of distinct square-free monomials, kept sorted.
class SupportSet {
 public:
  /// Throws NonSquareFreeInput if some monomial has a repeated factor.
  explicit SupportSet(std::vector<Monomial> monomials);

  /// Support of `f`. Throws CoefficientNotOne if some coefficient exceeds 1
  /// and NonSquareFreeInput for non-square-free terms.
  static SupportSet from_polynomial(const Polynomial& f);

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  /// Sum of the monomials.
  Polynomial polynomial() const;
  /// Canonical text of that sum; used as memo key.
  std::string key() const;

 private:
  std::vector<Monomial> monomials_;
};

/// Why a root-floret candidate was kept or dropped.
enum class Verdict {
  accepted,
  too_small,         // fewer than two labels cannot form a floret
  shared_multiple,   // some monomial is a multiple of two candidate labels
  single_edge,       // C_x = {t} with t != x
  no_subtree,        // no staged tree for some C'_x
  all_unstaged,      // every assembled tree failed the staging check
};

const char* to_string(Verdict v) noexcept;

struct CandidateOutcome {
  PrimeComponent labels;
  Verdict verdict = Verdict::accepted;
  std::size_t trees = 0;  // staged trees with this root floret
};

/// All staged trees whose interpolating polynomial is the sum of `source`,
/// sorted and deduplicated by canonical form.
class EquivalenceClass {
 public:
  EquivalenceClass(SupportSet source, std::vector<EventTree> trees,
                   std::vector<CandidateOutcome> root_candidates);

  const SupportSet& source() const noexcept { return source_; }
  const std::vector<EventTree>& trees() const noexcept { return trees_; }
  const std::vector<std::string>& canonical_forms() const noexcept { return canonical_; }
  std::size_t size() const noexcept { return trees_.size(); }
  bool empty() const noexcept { return trees_.empty(); }

  /// Top-level candidates in processing order; empty when a base case applied.
  const std::vector<CandidateOutcome>& root_candidates() const noexcept { return root_candidates_; }

 private:
  SupportSet source_;
  std::vector<EventTree> trees_;
  std::vector<std::string> canonical_;
  std::vector<CandidateOutcome> root_candidates_;
};

struct EnumerateOptions {
  /// Worker threads for the top-level candidates; output is unaffected.
  unsigned jobs = 1;
};

/// Recursive root-floret search restricted to the
/// minimal primes of the ideal generated by `c`.
EquivalenceClass staged_trees(const SupportSet& c, const EnumerateOptions& options = {});

/// Checks coefficients and square-freeness, then enumerates supp(f).
EquivalenceClass staged_trees(const Polynomial& f, const EnumerateOptions& options = {});

/// Canonical nested expression of every tree in staged_trees(c).
std::vector<std::string> nested_representations(const SupportSet& c,
                                                const EnumerateOptions& options = {});

/// Leaf weights of `t` read off a network polynomial on supp(c_T): each
/// root-to-leaf path takes the coefficient of its atomic monomial. Requires
/// distinct path monomials; throws DomainMismatch otherwise or when the
/// supports differ.
LeafWeighting weighting_from_network(const EventTree& t, const RealPolynomial& c);

/// Every labeled event tree (staged or not) with interpolating polynomial
/// equal to the sum of `c`: all root label sets and all assignments of
/// monomials to root labels, without minimal-prime pruning. Exponential;
/// throws DomainError beyond 20 variables. Sorted by canonical form.
std::vector<EventTree> labeled_event_trees(const SupportSet& c);

}  // namespace stagedtrees
