#pragma once

#include <vector>

#include "polymu/graph.hpp"
#include "polymu/pumping.hpp"

namespace polymu {

/// ({a},{f}): nodes 0, 1, 2, edges 0 -a-> 1 -a-> 2 -a-> 1, f on 1, root 0.
LabeledGraph example_graph();

/// power(example_graph(), 2).
LabeledGraph example_power();

/// The word (∅,a)(∅,b)({f},a) over ({a,b},{f}).
std::vector<WordLetter> example_word();

/// gen_rword_tree over example_word() with branching 2 and depth 2.
FiniteTree example_rword_tree();

}  // namespace polymu
