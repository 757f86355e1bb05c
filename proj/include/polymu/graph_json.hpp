#pragma once

#include <string>
#include <string_view>

#include "polymu/graph.hpp"

namespace polymu {

/// Parses the graph JSON format:
///   {"actions":[..],"colors":[..],"nodes":[{"id":..,"colors":[..]},..],
///    "root":..,"edges":[[from,action,to],..]}
/// Errors are reported as InputError naming the offending field.
LabeledGraph read_graph(std::string_view text);

/// Deterministic output: sorted keys, nodes sorted by id, edges sorted by
/// (from, action, to) names, node colors sorted by name. Single line.
std::string write_graph(const LabeledGraph& g);

/// read_graph followed by the tree-shape check.
FiniteTree read_tree(std::string_view text);

}  // namespace polymu
