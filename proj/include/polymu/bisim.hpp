#pragma once

#include <cstddef>

#include "polymu/graph.hpp"
#include "polymu/relation.hpp"

namespace polymu {

/// Greatest bisimulation between g1 and g2: start from all label-consistent
/// pairs and delete Forth/Back violators until stable. Throws InputError on
/// signature mismatch.
Relation largest_bisimulation(const LabeledGraph& g1, const LabeledGraph& g2);

/// The k-step approximant ~k (labels agree, and k rounds of Forth/Back).
Relation bounded_bisimulation(const LabeledGraph& g1, const LabeledGraph& g2, std::size_t k);

/// Checks Prop/Forth/Back for every pair of `r` directly.
bool is_bisimulation(const Relation& r, const LabeledGraph& g1, const LabeledGraph& g2);

bool bisimilar(const LabeledGraph& g1, const LabeledGraph& g2);

/// Bisimulation quotient by partition refinement. Each class is named by
/// its lexicographically least member id.
LabeledGraph quotient(const LabeledGraph& g);

/// Class index per node of the coarsest bisimulation partition of g;
/// classes are numbered in order of their least member id.
std::vector<std::size_t> bisimulation_classes(const LabeledGraph& g);

}  // namespace polymu
