#pragma once

// Test-only oracles and random instance generators. Nothing here calls the
// algorithms it is used to check.

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stagedtrees/polynomial.hpp"
#include "stagedtrees/tree.hpp"

namespace oracle {

using Names = std::vector<std::string>;  // sorted
using Hypergraph = std::vector<Names>;

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);
std::vector<std::string> fixture_lines(const std::string& name);

/// Every inclusion-minimal vertex set meeting all edges, by subset scan.
std::vector<Names> minimal_transversals(const Hypergraph& edges);

/// Path monomial -> multiplicity, keys like "a*b*b".
std::map<std::string, long> path_sum(const stagedtrees::EventTree& t);
std::map<std::string, long> term_map(const stagedtrees::Polynomial& f);

/// Unordered labeled tree.
struct Tree {
  std::vector<std::pair<std::string, Tree>> kids;
};

std::string canonical(const Tree& t);
bool staged(const Tree& t);

/// All labeled event trees with atomic monomials `support` (square-free,
/// sorted names), by recursive partitioning over every label subset.
std::vector<Tree> all_trees(const Hypergraph& support);

/// Canonical forms of the staged members of all_trees, sorted.
std::vector<std::string> staged_canonical(const Hypergraph& support);

Hypergraph support_of(const stagedtrees::Polynomial& f);

struct TreeShape {
  std::size_t max_leaves = 10;
  double reuse = 0.8;   // chance of reusing an admissible stage
  bool saturated = false;
};

/// Nested expression of a random tree that is staged and has distinct labels
/// along each path (square-free atoms). Saturated trees never reuse labels.
std::string random_tree(std::mt19937_64& rng, const TreeShape& shape);

/// Random square-free monomials over variables v0..v{vars-1}.
Hypergraph random_support(std::mt19937_64& rng, std::size_t vars, std::size_t max_terms,
                          std::size_t max_degree);

std::string to_text(const Hypergraph& support);

}  // namespace oracle
