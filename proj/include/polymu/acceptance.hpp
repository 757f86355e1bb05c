#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "polymu/apt.hpp"
#include "polymu/graph.hpp"
#include "polymu/parity.hpp"

namespace polymu {

/// Positions (v, q) at index v * |Q| + q; owner from the shape of δ(q),
/// literal positions are dead ends of the player the label test goes
/// against; priority Ω(q); initial (root, q_I). Throws InputError when the
/// graph signature differs from the automaton's.
ParityGame build_acceptance_game(const Apt& apt, const LabeledGraph& g);

bool accepts(const Apt& apt, const LabeledGraph& g);

/// S_i = {q | Exists wins (path[i], q)} for every node of a root path.
std::vector<std::set<StateId>> winning_state_sets(const Apt& apt, const FiniteTree& tree,
                                                  std::span<const NodeId> path);

/// Least (i, j) by j, 1 <= i < j <= 2^|Q| + 1, with S_i = S_j. Throws
/// InputError if the tree is rejected, the path is not a root path, or the
/// path ends before a pair is found.
std::pair<std::size_t, std::size_t> find_pumping_pair(const Apt& apt, const FiniteTree& tree,
                                                      std::span<const NodeId> path);

}  // namespace polymu
