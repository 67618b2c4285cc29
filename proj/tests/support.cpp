#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must be defined"
#endif

namespace oracle {

std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> fixture_lines(const std::string& name) {
  std::istringstream in(read_fixture(name));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<Names> minimal_transversals(const Hypergraph& edges) {
  std::set<std::string> all;
  for (const auto& e : edges) all.insert(e.begin(), e.end());
  const Names vars(all.begin(), all.end());
  const std::size_t d = vars.size();
  if (d > 20) throw std::runtime_error("oracle limited to 20 variables");

  std::vector<unsigned long> masks;
  for (const auto& e : edges) {
    unsigned long m = 0;
    for (const auto& v : e) m |= 1ul << (std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    masks.push_back(m);
  }
  auto covers = [&](unsigned long s) {
    return std::all_of(masks.begin(), masks.end(), [&](unsigned long e) { return (e & s) != 0; });
  };
  std::vector<Names> out;
  for (unsigned long s = 0; s < (1ul << d); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < d && minimal; ++i) {
      if (s >> i & 1ul) minimal = !covers(s & ~(1ul << i));
    }
    if (!minimal) continue;
    Names n;
    for (std::size_t i = 0; i < d; ++i) {
      if (s >> i & 1ul) n.push_back(vars[i]);
    }
    out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string join_sorted(std::vector<std::string> names) {
  if (names.empty()) return "1";
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += '*';
    out += n;
  }
  return out;
}

void walk(const stagedtrees::EventTree::Node& v, std::vector<std::string>& path,
          std::map<std::string, long>& out) {
  if (v.edges.empty()) {
    ++out[join_sorted(path)];
    return;
  }
  for (const auto& e : v.edges) {
    path.push_back(e.label.name());
    walk(*e.child, path, out);
    path.pop_back();
  }
}

}  // namespace

std::map<std::string, long> path_sum(const stagedtrees::EventTree& t) {
  std::map<std::string, long> out;
  std::vector<std::string> path;
  walk(t.root(), path, out);
  return out;
}

std::map<std::string, long> term_map(const stagedtrees::Polynomial& f) {
  std::map<std::string, long> out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::string> names;
    for (const auto& x : m.factors()) names.push_back(x.name());
    out[join_sorted(names)] = static_cast<long>(c);
  }
  return out;
}

std::string canonical(const Tree& t) {
  if (t.kids.empty()) return "1";
  std::vector<std::string> parts;
  for (const auto& [label, child] : t.kids) {
    parts.push_back(child.kids.empty() ? label : label + "*(" + canonical(child) + ")");
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " + ";
    out += p;
  }
  return out;
}

namespace {

void floret_sets(const Tree& t, std::vector<Names>& out) {
  if (t.kids.empty()) return;
  Names labels;
  for (const auto& [label, child] : t.kids) {
    labels.push_back(label);
    floret_sets(child, out);
  }
  std::sort(labels.begin(), labels.end());
  out.push_back(std::move(labels));
}

}  // namespace

bool staged(const Tree& t) {
  std::vector<Names> sets;
  floret_sets(t, sets);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i] == sets[j]) continue;
      Names common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) return false;
    }
  }
  return true;
}

namespace {

class AllTrees {
 public:
  const std::vector<Tree>& solve(Hypergraph c) {
    std::sort(c.begin(), c.end());
    std::string key;
    for (const auto& m : c) key += join_sorted(m) + "|";
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Tree> out;
    if (c.size() == 1 && c.front().empty()) {
      out.push_back(Tree{});
    } else {
      std::set<std::string> vars;
      for (const auto& m : c) vars.insert(m.begin(), m.end());
      const Names universe(vars.begin(), vars.end());
      for (unsigned long s = 0; s < (1ul << universe.size()); ++s) {
        Names a;
        for (std::size_t i = 0; i < universe.size(); ++i) {
          if (s >> i & 1ul) a.push_back(universe[i]);
        }
        if (a.size() < 2) continue;
        expand(c, a, out);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Each monomial goes to one label of a dividing it; every label needs at
  // least one monomial.
  void expand(const Hypergraph& c, const Names& a, std::vector<Tree>& out) {
    std::vector<Hypergraph> blocks(a.size());
    assign(c, a, 0, blocks, out);
  }

  void assign(const Hypergraph& c, const Names& a, std::size_t index, std::vector<Hypergraph>& blocks,
              std::vector<Tree>& out) {
    if (index < c.size()) {
      const Names& m = c[index];
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::binary_search(m.begin(), m.end(), a[i])) continue;
        Names rest;
        for (const auto& v : m) {
          if (v != a[i]) rest.push_back(v);
        }
        blocks[i].push_back(std::move(rest));
        assign(c, a, index + 1, blocks, out);
        blocks[i].pop_back();
      }
      return;
    }
    std::vector<std::vector<Tree>> choices;
    for (const auto& b : blocks) {
      if (b.empty()) return;
      choices.push_back(solve(b));
      if (choices.back().empty()) return;
    }
    std::vector<std::size_t> pick(a.size(), 0);
    while (true) {
      Tree t;
      for (std::size_t i = 0; i < a.size(); ++i) t.kids.emplace_back(a[i], choices[i][pick[i]]);
      out.push_back(std::move(t));
      std::size_t i = 0;
      while (i < a.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == a.size()) break;
    }
  }

  std::map<std::string, std::vector<Tree>> memo_;
};

}  // namespace

std::vector<Tree> all_trees(const Hypergraph& support) {
  AllTrees search;
  return search.solve(support);
}

std::vector<std::string> staged_canonical(const Hypergraph& support) {
  std::set<std::string> out;
  for (const auto& t : all_trees(support)) {
    if (staged(t)) out.insert(canonical(t));
  }
  return {out.begin(), out.end()};
}

Hypergraph support_of(const stagedtrees::Polynomial& f) {
  Hypergraph out;
  for (const auto& [m, c] : f.terms()) {
    Names n;
    for (const auto& x : m.factors()) n.push_back(x.name());
    out.push_back(std::move(n));
  }
  return out;
}

namespace {

struct GenNode {
  std::vector<std::pair<std::string, std::size_t>> kids;
  std::set<std::string> ancestors;
};

std::string nesting(const std::vector<GenNode>& nodes, std::size_t v) {
  const auto& n = nodes[v];
  if (n.kids.empty()) return "1";
  std::string out;
  for (const auto& [label, child] : n.kids) {
    if (!out.empty()) out += " + ";
    out += label;
    if (!nodes[child].kids.empty()) out += "*(" + nesting(nodes, child) + ")";
  }
  return out;
}

}  // namespace

std::string random_tree(std::mt19937_64& rng, const TreeShape& shape) {
  std::vector<GenNode> nodes(1);
  std::vector<Names> stages;
  std::vector<std::size_t> leaves{0};
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };

  while (true) {
    const std::size_t room = shape.max_leaves + 1 - leaves.size();  // largest floret that fits
    if (room < 2) break;
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng);
    const std::size_t v = leaves[pick];

    std::vector<std::size_t> admissible;
    if (!shape.saturated) {
      for (std::size_t s = 0; s < stages.size(); ++s) {
        const bool fits = stages[s].size() <= room &&
                          std::none_of(stages[s].begin(), stages[s].end(),
                                       [&](const std::string& x) { return nodes[v].ancestors.contains(x); });
        if (fits) admissible.push_back(s);
      }
    }
    Names labels;
    if (!admissible.empty() && coin(shape.reuse)) {
      labels = stages[admissible[std::uniform_int_distribution<std::size_t>(0, admissible.size() - 1)(rng)]];
    } else {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(room, 3))(rng);
      const std::string stem = "s" + std::to_string(stages.size()) + "_";
      for (std::size_t i = 0; i < k; ++i) labels.push_back(stem + std::to_string(i));
      stages.push_back(labels);
    }
    std::shuffle(labels.begin(), labels.end(), rng);

    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
    for (const auto& label : labels) {
      GenNode child;
      child.ancestors = nodes[v].ancestors;
      child.ancestors.insert(label);
      nodes.push_back(std::move(child));
      nodes[v].kids.emplace_back(label, nodes.size() - 1);
      leaves.push_back(nodes.size() - 1);
    }
    if (coin(0.1)) break;
  }
  return nesting(nodes, 0);
}

Hypergraph random_support(std::mt19937_64& rng, std::size_t vars, std::size_t max_terms,
                          std::size_t max_degree) {
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  std::set<Names> out;
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t deg = std::uniform_int_distribution<std::size_t>(1, std::min(vars, max_degree))(rng);
    std::vector<std::size_t> idx(vars);
    for (std::size_t i = 0; i < vars; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    Names m;
    for (std::size_t i = 0; i < deg; ++i) m.push_back("v" + std::to_string(idx[i]));
    std::sort(m.begin(), m.end());
    out.insert(std::move(m));
  }
  return {out.begin(), out.end()};
}

std::string to_text(const Hypergraph& support) {
  std::string out;
  for (const auto& m : support) {
    if (!out.empty()) out += " + ";
    out += join_sorted(m);
  }
  return out.empty() ? "0" : out;
}

}  // namespace oracle
