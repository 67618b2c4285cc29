#include "stagedtrees/tree_io.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "stagedtrees/errors.hpp"

namespace stagedtrees {
namespace {

nlohmann::json node_to_json(const EventTree::Node& v) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : v.edges) {
    edges.push_back({{"label", e.label.name()}, {"child", node_to_json(*e.child)}});
  }
  return {{"edges", std::move(edges)}};
}

EventTree::NodePtr node_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SyntaxError(0, "tree node must be a JSON object");
  auto it = j.find("edges");
  if (it == j.end() || it->empty()) return leaf_node();
  if (!it->is_array()) throw SyntaxError(0, "\"edges\" must be an array");
  auto node = std::make_shared<EventTree::Node>();
  for (const auto& e : *it) {
    if (!e.is_object() || !e.contains("label") || !e.at("label").is_string()) {
      throw SyntaxError(0, "edge needs a string \"label\"");
    }
    auto child = e.find("child");
    node->edges.push_back(EventTree::Edge{Indeterminate(e.at("label").get<std::string>()),
                                          child == e.end() ? leaf_node() : node_from_json(*child)});
  }
  return node;
}

constexpr std::array<const char*, 12> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
    "#a65628", "#f781bf", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3"};

std::string dot_quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

nlohmann::json tree_to_json(const EventTree& t) { return {{"root", node_to_json(t.root())}}; }

EventTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("root")) throw SyntaxError(0, "tree JSON needs a \"root\" object");
  return EventTree::from_root(node_from_json(j.at("root")));
}

EventTree tree_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.byte, e.what());
  }
  return tree_from_json(j);
}

LeafWeighting weighting_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SyntaxError(0, "weights must be a JSON array");
  LeafWeighting g;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("path") || !entry.contains("weight") ||
        !entry.at("path").is_array() || !entry.at("weight").is_number()) {
      throw SyntaxError(0, "weight entries need \"path\" (array) and \"weight\" (number)");
    }
    Path p;
    for (const auto& label : entry.at("path")) {
      if (!label.is_string()) throw SyntaxError(0, "path entries must be strings");
      p.emplace_back(label.get<std::string>());
    }
    if (!g.emplace(std::move(p), entry.at("weight").get<double>()).second) {
      throw DomainMismatch("duplicate path in weighting");
    }
  }
  return g;
}

std::string tree_to_dot(const EventTree& t, std::string_view graph_name) {
  // Colour assignment depends only on the set of floret label sets.
  std::map<std::vector<Indeterminate>, std::size_t> colour;
  std::vector<const EventTree::Node*> stack{&t.root()};
  while (!stack.empty()) {
    const auto* v = stack.back();
    stack.pop_back();
    if (v->is_leaf()) continue;
    std::vector<Indeterminate> labels;
    for (const auto& e : v->edges) {
      labels.push_back(e.label);
      stack.push_back(e.child.get());
    }
    std::sort(labels.begin(), labels.end());
    colour.emplace(std::move(labels), 0);
  }
  std::size_t next = 0;
  for (auto& [labels, index] : colour) index = next++;

  std::string out = "digraph " + dot_quoted(graph_name) + " {\n";
  out += "  node [shape=circle, style=filled, label=\"\", fillcolor=\"#ffffff\"];\n";
  std::size_t counter = 0;
  auto emit = [&](auto&& self, const EventTree::Node& v) -> std::size_t {
    const std::size_t id = counter++;
    if (v.is_leaf()) {
      out += "  n" + std::to_string(id) + ";\n";
      return id;
    }
    std::vector<Indeterminate> labels;
    for (const auto& e : v.edges) labels.push_back(e.label);
    std::sort(labels.begin(), labels.end());
    out += "  n" + std::to_string(id) + " [fillcolor=\"" +
           kPalette[colour.at(labels) % kPalette.size()] + "\"];\n";
    for (const auto& e : v.edges) {
      const std::size_t child = self(self, *e.child);
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(child) +
             " [label=" + dot_quoted(e.label.name()) + "];\n";
    }
    return id;
  };
  emit(emit, t.root());
  out += "}\n";
  return out;
}

}  // namespace stagedtrees
