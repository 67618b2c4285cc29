#include "stagedtrees/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "stagedtrees/errors.hpp"

namespace stagedtrees {

SupportSet::SupportSet(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (const auto& m : monomials_) {
    if (!m.is_square_free()) throw NonSquareFreeInput("monomial " + m.to_string() + " is not square-free");
  }
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
}

SupportSet SupportSet::from_polynomial(const Polynomial& f) {
  for (const auto& [m, c] : f.terms()) {
    if (!m.is_square_free()) throw NonSquareFreeInput("monomial " + m.to_string() + " is not square-free");
    if (c != 1) {
      throw CoefficientNotOne("coefficient " + c.str() + " of " + m.to_string() +
                              "; staged trees with square-free atoms have all coefficients 1");
    }
  }
  return SupportSet(f.support());
}

Polynomial SupportSet::polynomial() const { return Polynomial::from_monomials(monomials_); }

std::string SupportSet::key() const {
  std::string out;
  for (const auto& m : monomials_) {
    if (!out.empty()) out += '+';
    out += m.to_string();
  }
  return out;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::too_small: return "too_small";
    case Verdict::shared_multiple: return "shared_multiple";
    case Verdict::single_edge: return "single_edge";
    case Verdict::no_subtree: return "no_subtree";
    case Verdict::all_unstaged: return "all_unstaged";
  }
  return "unknown";
}

EquivalenceClass::EquivalenceClass(SupportSet source, std::vector<EventTree> trees,
                                   std::vector<CandidateOutcome> root_candidates)
    : source_(std::move(source)), root_candidates_(std::move(root_candidates)) {
  std::vector<std::pair<std::string, EventTree>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(canonical_form(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  trees_.reserve(keyed.size());
  canonical_.reserve(keyed.size());
  for (auto& [key, t] : keyed) {
    canonical_.push_back(std::move(key));
    trees_.push_back(std::move(t));
  }
}

namespace {

using LabelSet = std::vector<Indeterminate>;

// Interned floret label sets: equal sets share one address.
class LabelSetPool {
 public:
  const LabelSet* intern(LabelSet s) {
    std::lock_guard lock(mutex_);
    return &*sets_.insert(std::move(s)).first;
  }

 private:
  std::mutex mutex_;
  std::set<LabelSet> sets_;
};

bool disjoint(const LabelSet& a, const LabelSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

using FloretSets = std::vector<const LabelSet*>;

// A staged subtree together with the distinct label sets of its florets.
struct Candidate {
  EventTree tree;
  std::shared_ptr<const FloretSets> florets;
};

using Candidates = std::vector<Candidate>;
using Support = std::vector<Monomial>;

std::string support_key(const Support& c) {
  std::string out;
  for (const auto& m : c) {
    if (!out.empty()) out += '+';
    out += m.to_string();
  }
  return out;
}

class StagedTreeSearch {
 public:
  // Memoized on the canonical text of the support.
  std::shared_ptr<const Candidates> solve(const Support& c) {
    const std::string key = support_key(c);
    {
      std::lock_guard lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto result = std::make_shared<const Candidates>(solve_uncached(c, nullptr, 1));
    std::lock_guard lock(memo_mutex_);
    return memo_.emplace(key, std::move(result)).first->second;
  }

  Candidates solve_uncached(const Support& c, std::vector<CandidateOutcome>* outcomes,
                            unsigned jobs) {
    Candidates out;
    if (c.empty()) return out;
    if (c.size() == 1) {
      if (c.front().is_one()) out.push_back(Candidate{EventTree(), empty_florets()});
      return out;
    }
    if (std::any_of(c.begin(), c.end(), [](const Monomial& m) { return m.is_one(); })) {
      // 1 together with other terms: no root floret can divide 1.
      return out;
    }
    if (std::all_of(c.begin(), c.end(), [](const Monomial& m) { return m.degree() == 1; })) {
      std::vector<std::pair<Indeterminate, EventTree>> branches;
      LabelSet labels;
      for (const auto& m : c) {
        branches.emplace_back(m.factors().front(), EventTree());
        labels.push_back(m.factors().front());
      }
      auto florets = std::make_shared<FloretSets>(FloretSets{pool_.intern(std::move(labels))});
      out.push_back(Candidate{EventTree::floret(std::move(branches)), std::move(florets)});
      return out;
    }

    const auto primes = minimal_primes(interreduce(c));
    std::vector<Candidates> per_prime(primes.size());
    std::vector<CandidateOutcome> local(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) local[i].labels = primes[i];

    auto work = [&](std::size_t i) { per_prime[i] = expand(c, primes[i], local[i]); };
    if (jobs <= 1 || primes.size() <= 1) {
      for (std::size_t i = 0; i < primes.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      const unsigned n = std::min<std::size_t>(jobs, primes.size());
      for (unsigned w = 0; w < n; ++w) {
        workers.emplace_back([&] {
          for (std::size_t i = next++; i < primes.size(); i = next++) work(i);
        });
      }
      for (auto& t : workers) t.join();
    }

    for (auto& part : per_prime) {
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    if (outcomes) *outcomes = std::move(local);
    return out;
  }

 private:
  // All staged trees on support `c` whose root floret is labeled by `f`.
  Candidates expand(const Support& c, const PrimeComponent& f, CandidateOutcome& outcome) {
    const auto& labels = f.vars;
    if (labels.size() < 2) {
      outcome.verdict = Verdict::too_small;
      return {};
    }

    // Multiples of each root label; they must partition c.
    std::vector<Support> multiples(labels.size());
    for (const auto& t : c) {
      std::size_t owners = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (t.contains(labels[i])) {
          multiples[i].push_back(t);
          ++owners;
        }
      }
      if (owners > 1) {
        outcome.verdict = Verdict::shared_multiple;
        return {};
      }
    }

    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (multiples[i].size() == 1 && multiples[i].front() != Monomial{labels[i]}) {
        outcome.verdict = Verdict::single_edge;
        return {};
      }
    }

    std::vector<std::shared_ptr<const Candidates>> subtrees;
    subtrees.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      Support quotient;
      quotient.reserve(multiples[i].size());
      for (const auto& t : multiples[i]) quotient.push_back(t.divided_by(labels[i]));
      std::sort(quotient.begin(), quotient.end());
      auto found = solve(quotient);
      if (found->empty()) {
        outcome.verdict = Verdict::no_subtree;
        return {};
      }
      subtrees.push_back(std::move(found));
    }

    Candidates out;
    FloretSets accumulated{pool_.intern(labels)};
    std::vector<const Candidate*> chosen(labels.size(), nullptr);
    combine(labels, subtrees, 0, accumulated, chosen, out);
    outcome.trees = out.size();
    outcome.verdict = out.empty() ? Verdict::all_unstaged : Verdict::accepted;
    return out;
  }

  // Walks the product of subtree choices, pruning as soon as two florets
  // overlap without being equal. Such a clash persists under extension.
  void combine(const LabelSet& labels, const std::vector<std::shared_ptr<const Candidates>>& subtrees,
               std::size_t depth, FloretSets& accumulated, std::vector<const Candidate*>& chosen,
               Candidates& out) {
    if (depth == labels.size()) {
      std::vector<std::pair<Indeterminate, EventTree>> branches;
      branches.reserve(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) branches.emplace_back(labels[i], chosen[i]->tree);
      auto florets = std::make_shared<FloretSets>(accumulated);
      std::sort(florets->begin(), florets->end());
      out.push_back(Candidate{EventTree::floret(std::move(branches)), std::move(florets)});
      return;
    }
    for (const auto& candidate : *subtrees[depth]) {
      const std::size_t mark = accumulated.size();
      bool compatible = true;
      for (const LabelSet* s : *candidate.florets) {
        if (std::find(accumulated.begin(), accumulated.end(), s) != accumulated.end()) continue;
        for (std::size_t k = 0; k < accumulated.size() && compatible; ++k) {
          compatible = disjoint(*s, *accumulated[k]);
        }
        if (!compatible) break;
        accumulated.push_back(s);
      }
      if (compatible) {
        chosen[depth] = &candidate;
        combine(labels, subtrees, depth + 1, accumulated, chosen, out);
      }
      accumulated.resize(mark);
    }
  }

  std::shared_ptr<const FloretSets> empty_florets() {
    static const auto none = std::make_shared<const FloretSets>();
    return none;
  }

  LabelSetPool pool_;
  std::mutex memo_mutex_;
  std::unordered_map<std::string, std::shared_ptr<const Candidates>> memo_;
};

}  // namespace

EquivalenceClass staged_trees(const SupportSet& c, const EnumerateOptions& options) {
  StagedTreeSearch search;
  std::vector<CandidateOutcome> outcomes;
  Candidates found = search.solve_uncached(c.monomials(), &outcomes, std::max(1u, options.jobs));
  std::vector<EventTree> trees;
  trees.reserve(found.size());
  for (auto& candidate : found) trees.push_back(std::move(candidate.tree));
  return EquivalenceClass(c, std::move(trees), std::move(outcomes));
}

EquivalenceClass staged_trees(const Polynomial& f, const EnumerateOptions& options) {
  return staged_trees(SupportSet::from_polynomial(f), options);
}

std::vector<std::string> nested_representations(const SupportSet& c, const EnumerateOptions& options) {
  return staged_trees(c, options).canonical_forms();
}

LeafWeighting weighting_from_network(const EventTree& t, const RealPolynomial& c) {
  LeafWeighting g;
  std::set<Monomial> seen;
  for (auto& path : leaf_paths(t)) {
    Monomial m(path);
    if (!seen.insert(m).second) throw DomainMismatch("two leaves share the monomial " + m.to_string());
    auto it = c.terms().find(m);
    if (it == c.terms().end()) throw DomainMismatch("no coefficient for " + m.to_string());
    g.emplace(std::move(path), it->second);
  }
  if (seen.size() != c.size()) throw DomainMismatch("polynomial has monomials without a leaf");
  return g;
}

namespace {

class LabeledTreeSearch {
 public:
  const std::vector<EventTree>& solve(const Support& c) {
    const std::string key = support_key(c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<EventTree> out = solve_uncached(c);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<EventTree> solve_uncached(const Support& c) {
    std::vector<EventTree> out;
    if (c.size() == 1 && c.front().is_one()) {
      out.emplace_back();
      return out;
    }
    std::set<Indeterminate> vars;
    for (const auto& m : c) vars.insert(m.factors().begin(), m.factors().end());
    const std::vector<Indeterminate> universe(vars.begin(), vars.end());
    const std::size_t d = universe.size();
    if (d > 20) throw DomainError("exhaustive labeled tree enumeration limited to 20 variables");

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
      if (std::popcount(mask) < 2) continue;
      LabelSet root;
      for (std::size_t i = 0; i < d; ++i) {
        if (mask >> i & 1u) root.push_back(universe[i]);
      }
      std::vector<Support> blocks(root.size());
      assign(c, root, 0, blocks, out);
    }
    return out;
  }

  // Assigns each monomial to one root label dividing it.
  void assign(const Support& c, const LabelSet& root, std::size_t index, std::vector<Support>& blocks,
              std::vector<EventTree>& out) {
    if (index == c.size()) {
      if (std::any_of(blocks.begin(), blocks.end(), [](const Support& b) { return b.empty(); })) return;
      std::vector<const std::vector<EventTree>*> subtrees;
      for (std::size_t i = 0; i < root.size(); ++i) {
        Support quotient;
        for (const auto& t : blocks[i]) quotient.push_back(t.divided_by(root[i]));
        std::sort(quotient.begin(), quotient.end());
        const auto& found = solve(quotient);
        if (found.empty()) return;
        subtrees.push_back(&found);
      }
      std::vector<std::size_t> pick(root.size(), 0);
      while (true) {
        std::vector<std::pair<Indeterminate, EventTree>> branches;
        for (std::size_t i = 0; i < root.size(); ++i) branches.emplace_back(root[i], (*subtrees[i])[pick[i]]);
        out.push_back(EventTree::floret(std::move(branches)));
        std::size_t i = 0;
        while (i < root.size() && ++pick[i] == subtrees[i]->size()) pick[i++] = 0;
        if (i == root.size()) break;
      }
      return;
    }
    const Monomial& t = c[index];
    for (std::size_t i = 0; i < root.size(); ++i) {
      if (!t.contains(root[i])) continue;
      blocks[i].push_back(t);
      assign(c, root, index + 1, blocks, out);
      blocks[i].pop_back();
    }
  }

  std::map<std::string, std::vector<EventTree>> memo_;
};

}  // namespace

std::vector<EventTree> labeled_event_trees(const SupportSet& c) {
  LabeledTreeSearch search;
  std::vector<EventTree> trees = search.solve(c.monomials());
  std::vector<std::pair<std::string, EventTree>> keyed;
  for (auto& t : trees) keyed.emplace_back(canonical_form(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<EventTree> out;
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

}  // namespace stagedtrees
