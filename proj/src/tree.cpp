#include "stagedtrees/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "stagedtrees/errors.hpp"

namespace stagedtrees {

const EventTree::NodePtr& leaf_node() {
  static const EventTree::NodePtr leaf = std::make_shared<const EventTree::Node>();
  return leaf;
}

namespace {

void check_floret(const std::vector<EventTree::Edge>& edges) {
  if (edges.size() == 1) {
    throw InvalidTree("vertex with a single emanating edge labeled " + edges.front().label.name());
  }
  std::vector<Indeterminate> labels;
  labels.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.child) throw InvalidTree("edge " + e.label.name() + " has no child");
    labels.push_back(e.label);
  }
  std::sort(labels.begin(), labels.end());
  if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end()) {
    throw InvalidTree("label " + dup->name() + " repeated within one floret");
  }
}

void check_recursive(const EventTree::Node& node) {
  check_floret(node.edges);
  for (const auto& e : node.edges) check_recursive(*e.child);
}

template <typename Visit>
void visit_preorder(const EventTree::Node& node, Path& path, Visit&& visit) {
  visit(node, path);
  for (const auto& e : node.edges) {
    path.push_back(e.label);
    visit_preorder(*e.child, path, visit);
    path.pop_back();
  }
}

std::vector<Indeterminate> floret_labels(const EventTree::Node& node) {
  std::vector<Indeterminate> labels;
  labels.reserve(node.edges.size());
  for (const auto& e : node.edges) labels.push_back(e.label);
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

EventTree::EventTree() : root_(leaf_node()) {}

EventTree EventTree::floret(std::vector<std::pair<Indeterminate, EventTree>> branches) {
  auto node = std::make_shared<Node>();
  node->edges.reserve(branches.size());
  for (auto& [label, subtree] : branches) node->edges.push_back(Edge{label, subtree.root_});
  if (node->edges.empty()) throw InvalidTree("a floret needs at least two edges");
  check_floret(node->edges);
  return EventTree(std::move(node));
}

EventTree EventTree::from_root(NodePtr root) {
  if (!root) throw InvalidTree("null root");
  check_recursive(*root);
  return EventTree(std::move(root));
}

std::vector<Indeterminate> EventTree::root_labels() const {
  std::vector<Indeterminate> out;
  for (const auto& e : root_->edges) out.push_back(e.label);
  return out;
}

EventTree EventTree::subtree(const Path& path) const {
  NodePtr node = root_;
  for (const auto& label : path) {
    auto it = std::find_if(node->edges.begin(), node->edges.end(),
                           [&](const Edge& e) { return e.label == label; });
    if (it == node->edges.end()) throw DomainMismatch("no edge labeled " + label.name());
    node = it->child;
  }
  return EventTree(node);
}

std::size_t EventTree::leaf_count() const {
  std::size_t n = 0;
  Path path;
  visit_preorder(*root_, path, [&](const Node& v, const Path&) { n += v.is_leaf(); });
  return n;
}

std::size_t EventTree::edge_count() const {
  std::size_t n = 0;
  Path path;
  visit_preorder(*root_, path, [&](const Node& v, const Path&) { n += v.edges.size(); });
  return n;
}

std::set<Indeterminate> EventTree::labels() const {
  std::set<Indeterminate> out;
  Path path;
  visit_preorder(*root_, path, [&](const Node& v, const Path&) {
    for (const auto& e : v.edges) out.insert(e.label);
  });
  return out;
}

bool is_staged(const EventTree& t) {
  // A label owned by two different floret label sets means those sets
  // overlap without being equal.
  std::set<std::vector<Indeterminate>> sets;
  Path path;
  visit_preorder(t.root(), path, [&](const EventTree::Node& v, const Path&) {
    if (!v.is_leaf()) sets.insert(floret_labels(v));
  });
  std::unordered_map<Indeterminate, const std::vector<Indeterminate>*> owner;
  for (const auto& s : sets) {
    for (const auto& x : s) {
      auto [it, inserted] = owner.emplace(x, &s);
      if (!inserted && it->second != &s) return false;
    }
  }
  return true;
}

std::vector<Stage> stages(const EventTree& t) {
  if (!is_staged(t)) throw NotStaged("floret label sets overlap without being equal");
  std::map<std::vector<Indeterminate>, std::vector<Path>> grouped;
  Path path;
  visit_preorder(t.root(), path, [&](const EventTree::Node& v, const Path& p) {
    if (!v.is_leaf()) grouped[floret_labels(v)].push_back(p);
  });
  std::vector<Stage> out;
  for (auto& [labels, members] : grouped) out.push_back(Stage{labels, std::move(members)});
  return out;
}

Polynomial interpolating_polynomial(const EventTree& t) {
  std::unordered_map<const EventTree::Node*, Polynomial> memo;
  std::function<const Polynomial&(const EventTree::Node&)> poly =
      [&](const EventTree::Node& v) -> const Polynomial& {
    if (auto it = memo.find(&v); it != memo.end()) return it->second;
    Polynomial c;
    if (v.is_leaf()) {
      c = Polynomial::one();
    } else {
      for (const auto& e : v.edges) c += multiply_label(e.label, poly(*e.child), LabelMode::general);
    }
    return memo.emplace(&v, std::move(c)).first->second;
  };
  return poly(t.root());
}

std::vector<Path> leaf_paths(const EventTree& t) {
  std::vector<Path> out;
  Path path;
  visit_preorder(t.root(), path, [&](const EventTree::Node& v, const Path& p) {
    if (v.is_leaf()) out.push_back(p);
  });
  return out;
}

RealPolynomial network_polynomial(const EventTree& t, const LeafWeighting& g) {
  const auto paths = leaf_paths(t);
  if (paths.size() != g.size()) {
    throw DomainMismatch("weighting has " + std::to_string(g.size()) + " entries for " +
                         std::to_string(paths.size()) + " leaves");
  }
  RealPolynomial out;
  for (const auto& p : paths) {
    auto it = g.find(p);
    if (it == g.end()) throw DomainMismatch("weighting misses a leaf");
    out.add_term(Monomial(p), it->second);
  }
  return out;
}

Evaluation evaluate(const EventTree& t, const std::map<Indeterminate, double>& values) {
  auto value_of = [&](const Indeterminate& x) {
    auto it = values.find(x);
    if (it == values.end()) throw MissingValue("no value for label " + x.name());
    return it->second;
  };

  Evaluation out;
  std::function<void(const EventTree::Node&, Path&, double)> walk =
      [&](const EventTree::Node& v, Path& path, double probability) {
        if (v.is_leaf()) {
          out.atoms.emplace(path, probability);
          return;
        }
        double sum = 0.0;
        for (const auto& e : v.edges) sum += value_of(e.label);
        out.florets.push_back(FloretSum{path, sum});
        for (const auto& e : v.edges) {
          path.push_back(e.label);
          walk(*e.child, path, probability * value_of(e.label));
          path.pop_back();
        }
      };
  Path path;
  walk(t.root(), path, 1.0);
  return out;
}

namespace {

class NestingParser {
 public:
  explicit NestingParser(std::string_view text) : text_(text) {}

  EventTree parse() {
    EventTree t = parse_sum();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return t;
  }

 private:
  EventTree parse_sum() {
    skip_space();
    const std::size_t start = pos_;
    std::vector<std::pair<Indeterminate, EventTree>> branches;
    std::size_t ones = 0;
    do {
      skip_space();
      if (peek() == '1') {
        ++pos_;
        ++ones;
        continue;
      }
      const Indeterminate label = parse_identifier();
      EventTree child;
      skip_space();
      const std::size_t before_star = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != '(') throw SyntaxError(pos_, "expected '(' after '*'");
      }
      if (peek() == '(') {
        ++pos_;
        child = parse_sum();
        skip_space();
        if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
        ++pos_;
      } else {
        pos_ = before_star;
      }
      branches.emplace_back(label, std::move(child));
    } while (accept('+'));

    if (ones > 0) {
      if (!branches.empty() || ones > 1) {
        throw InvalidNesting("constant 1 mixed with labeled terms in the sum at position " +
                             std::to_string(start));
      }
      return EventTree();
    }
    if (branches.size() < 2) {
      throw InvalidNesting("sum at position " + std::to_string(start) +
                           " has a single term; a floret needs at least two labels");
    }
    try {
      return EventTree::floret(std::move(branches));
    } catch (const InvalidTree& e) {
      throw InvalidNesting(std::string(e.what()) + " (sum at position " + std::to_string(start) + ")");
    }
  }

  Indeterminate parse_identifier() {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "expected a label or 1");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return Indeterminate(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_nested(const EventTree::Node& v, bool sorted, std::string& out) {
  std::vector<const EventTree::Edge*> edges;
  for (const auto& e : v.edges) edges.push_back(&e);
  if (sorted) {
    std::sort(edges.begin(), edges.end(),
              [](const EventTree::Edge* a, const EventTree::Edge* b) { return a->label < b->label; });
  }
  bool first = true;
  for (const auto* e : edges) {
    if (!first) out += " + ";
    first = false;
    out += e->label.name();
    if (!e->child->is_leaf()) {
      out += "*(";
      print_nested(*e->child, sorted, out);
      out += ')';
    }
  }
}

std::string nested_string(const EventTree& t, bool sorted) {
  if (t.is_single_vertex()) return "1";
  std::string out;
  print_nested(t.root(), sorted, out);
  return out;
}

}  // namespace

EventTree from_nested(std::string_view text) { return NestingParser(text).parse(); }

std::string to_nested(const EventTree& t) { return nested_string(t, false); }

std::string canonical_form(const EventTree& t) { return nested_string(t, true); }

bool is_saturated(const EventTree& t) {
  std::set<Indeterminate> seen;
  bool distinct = true;
  Path path;
  visit_preorder(t.root(), path, [&](const EventTree::Node& v, const Path&) {
    for (const auto& e : v.edges) distinct &= seen.insert(e.label).second;
  });
  return distinct;
}

FreshLabels::FreshLabels(std::string prefix, std::set<std::string> reserved)
    : prefix_(std::move(prefix)), reserved_(std::move(reserved)) {
  if (!is_identifier(prefix_ + "1")) throw SyntaxError(0, "invalid label prefix '" + prefix_ + "'");
}

FreshLabels FreshLabels::for_tree(std::string prefix, const EventTree& t) {
  std::set<std::string> reserved;
  for (const auto& x : t.labels()) reserved.insert(x.name());
  return FreshLabels(std::move(prefix), std::move(reserved));
}

Indeterminate FreshLabels::next() {
  std::string name;
  do {
    name = prefix_ + std::to_string(++counter_);
  } while (reserved_.count(name) != 0);
  reserved_.insert(name);
  ++issued_;
  return Indeterminate(name);
}

namespace {

EventTree::NodePtr make_node(std::vector<EventTree::Edge> edges) {
  auto node = std::make_shared<EventTree::Node>();
  node->edges = std::move(edges);
  return node;
}

EventTree::NodePtr binarize_node(const EventTree::Node& v, FreshLabels& fresh) {
  if (v.is_leaf()) return leaf_node();
  const std::size_t k = v.edges.size();

  if (k == 2) {
    auto left = binarize_node(*v.edges[0].child, fresh);
    auto right = binarize_node(*v.edges[1].child, fresh);
    return make_node({{v.edges[0].label, left}, {v.edges[1].label, right}});
  }

  // Labels for the cascade, outermost pair first.
  std::vector<std::pair<Indeterminate, Indeterminate>> pairs;
  for (std::size_t level = 0; level + 1 < k; ++level) {
    Indeterminate a = fresh.next();
    Indeterminate b = fresh.next();
    pairs.emplace_back(a, b);
  }
  std::vector<EventTree::NodePtr> children;
  for (const auto& e : v.edges) children.push_back(binarize_node(*e.child, fresh));

  // Deepest pair holds the first two children; each outer level adds the
  // next child on the right.
  EventTree::NodePtr cascade =
      make_node({{pairs[k - 2].first, children[0]}, {pairs[k - 2].second, children[1]}});
  for (std::size_t level = k - 2; level-- > 0;) {
    cascade = make_node({{pairs[level].first, cascade}, {pairs[level].second, children[k - 1 - level]}});
  }
  return cascade;
}

}  // namespace

EventTree binarize(const EventTree& t, FreshLabels& fresh) {
  return EventTree::from_root(binarize_node(t.root(), fresh));
}

EventTree minimal_representation(const EventTree& t, FreshLabels& fresh) {
  if (t.is_single_vertex()) throw DegenerateTree("the single-vertex tree has no floret representation");
  std::vector<std::pair<Indeterminate, EventTree>> branches;
  const std::size_t n = t.leaf_count();
  for (std::size_t i = 0; i < n; ++i) branches.emplace_back(fresh.next(), EventTree());
  return EventTree::floret(std::move(branches));
}

}  // namespace stagedtrees
