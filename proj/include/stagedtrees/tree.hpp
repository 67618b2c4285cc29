#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stagedtrees/polynomial.hpp"

namespace stagedtrees {

/// Labels along the edges from the root; identifies a vertex (and, for a
/// leaf, its root-to-leaf path) because labels within a floret are distinct.
using Path = std::vector<Indeterminate>;

/// Immutable labeled event tree. Vertices have no or at least two children
/// and the labels of one floret are pairwise distinct; both are checked on
/// construction. Subtrees are shared between copies, so trees are cheap to
/// copy and to assemble from existing subtrees.
class EventTree {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Edge {
    Indeterminate label;
    NodePtr child;
  };

  struct Node {
    std::vector<Edge> edges;
    bool is_leaf() const noexcept { return edges.empty(); }
  };

  /// The single-vertex tree.
  EventTree();

  /// A root floret whose edges carry the given labels and subtrees, in order.
  /// Throws InvalidTree on fewer than two edges or repeated labels.
  static EventTree floret(std::vector<std::pair<Indeterminate, EventTree>> branches);

  /// Wraps an externally built node graph after validating every floret.
  static EventTree from_root(NodePtr root);

  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }
  bool is_single_vertex() const noexcept { return root_->is_leaf(); }

  /// Root floret labels in edge order.
  std::vector<Indeterminate> root_labels() const;

  /// Subtree rooted at the end of `path`; throws DomainMismatch if absent.
  EventTree subtree(const Path& path) const;

  std::size_t leaf_count() const;
  std::size_t edge_count() const;

  /// All edge labels.
  std::set<Indeterminate> labels() const;

 private:
  explicit EventTree(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

/// Shared leaf node; all single-vertex subtrees point here.
const EventTree::NodePtr& leaf_node();

/// Vertices with the same floret label set.
struct Stage {
  std::vector<Indeterminate> label_set;  // sorted
  std::vector<Path> members;             // pre-order

  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Every two floret label sets are equal or disjoint.
bool is_staged(const EventTree& t);

/// Non-leaf vertices grouped by floret label set, ordered by label set.
/// Throws NotStaged.
std::vector<Stage> stages(const EventTree& t);

/// Sum over vertices v of c(T_v) = sum of label * c(child), 1 at leaves.
/// Labels repeated along a path raise exponents.
Polynomial interpolating_polynomial(const EventTree& t);

/// Root-to-leaf paths in pre-order.
std::vector<Path> leaf_paths(const EventTree& t);

/// g: root-to-leaf path -> real weight.
using LeafWeighting = std::map<Path, double>;

/// Sum of g(path) * (product of labels on path). Throws DomainMismatch if the
/// weighting's domain is not exactly the set of leaves.
RealPolynomial network_polynomial(const EventTree& t, const LeafWeighting& g);

struct FloretSum {
  Path vertex;
  double sum;
};

struct Evaluation {
  std::map<Path, double> atoms;
  std::vector<FloretSum> florets;  // pre-order, non-leaf vertices only
};

/// Atom probabilities under a label valuation, plus every floret's label sum.
/// Does not require the sums to be 1. Throws MissingValue.
Evaluation evaluate(const EventTree& t, const std::map<Indeterminate, double>& values);

/// Builds the tree of a nested expression such as
/// "t0 + t1*(f1 + f2) + t2(f1 + f2)"; "1" is the single vertex and a bare
/// label is an edge to a leaf. Throws SyntaxError on malformed text and
/// InvalidNesting for a one-term sum, repeated labels or "1" inside a sum.
EventTree from_nested(std::string_view text);

/// Nested expression in the tree's own edge order.
std::string to_nested(const EventTree& t);

/// Nested expression with every floret's edges sorted by label. Two trees
/// have equal canonical forms iff they differ only in sibling order.
std::string canonical_form(const EventTree& t);

/// All edge labels pairwise distinct.
bool is_saturated(const EventTree& t);

/// Generates "<prefix>1", "<prefix>2", ... skipping reserved names.
class FreshLabels {
 public:
  explicit FreshLabels(std::string prefix, std::set<std::string> reserved = {});
  /// Reserves every label already used in `t`.
  static FreshLabels for_tree(std::string prefix, const EventTree& t);

  Indeterminate next();
  std::size_t issued() const noexcept { return issued_; }

 private:
  std::string prefix_;
  std::set<std::string> reserved_;
  std::size_t counter_ = 0;
  std::size_t issued_ = 0;
};

/// Splits every floret with k > 2 edges into a left-nested cascade of k - 1
/// binary florets with fresh labels; leaves keep their left-to-right order.
EventTree binarize(const EventTree& t, FreshLabels& fresh);

/// A single floret with one fresh label per root-to-leaf path of `t`.
/// Throws DegenerateTree for the single-vertex tree.
EventTree minimal_representation(const EventTree& t, FreshLabels& fresh);

}  // namespace stagedtrees
