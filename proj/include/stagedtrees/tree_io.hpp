#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "stagedtrees/tree.hpp"

namespace stagedtrees {

/// {"root": {"edges": [{"label": "x", "child": {...}}, ...]}}; a leaf is
/// {"edges": []}.
nlohmann::json tree_to_json(const EventTree& t);

/// Inverse of tree_to_json; a node without "edges" is a leaf. Throws
/// SyntaxError for schema violations and InvalidTree for invalid florets.
EventTree tree_from_json(const nlohmann::json& j);
EventTree tree_from_json_text(std::string_view text);

/// [{"path": ["x", "y"], "weight": 0.5}, ...]
LeafWeighting weighting_from_json(const nlohmann::json& j);

/// Graphviz digraph: vertices filled by floret label set (one palette colour
/// per distinct set, sets taken in sorted order), edges labeled.
std::string tree_to_dot(const EventTree& t, std::string_view graph_name = "tree");

}  // namespace stagedtrees
