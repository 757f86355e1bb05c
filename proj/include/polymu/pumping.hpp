#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polymu/formula.hpp"
#include "polymu/graph.hpp"

namespace polymu {

/// Nodes of a tree split by a root path and two indices i < j on it.
struct PumpPartition {
  std::vector<NodeId> before;  // root path lacks the prefix v_0..v_i
  std::vector<NodeId> pumped;  // has v_0..v_i but not v_0..v_j
  std::vector<NodeId> after;   // has v_0..v_j
};

/// Requires a root path and 0 < i < j < path.size(); throws InputError otherwise.
PumpPartition partition_nodes(const FiniteTree& tree, std::span<const NodeId> path, std::size_t i,
                              std::size_t j);

/// The tree pumped k times between path[i] and path[j]: the pumped part is
/// cut out (k = 0) or repeated k times. Copies are named "(id,k')".
FiniteTree pump(const FiniteTree& tree, std::span<const NodeId> path, std::size_t i, std::size_t j,
                std::size_t k);

/// One level of a same-word tree: the colors of its nodes and the action on
/// every edge leaving it.
struct WordLetter {
  std::vector<std::string> colors;
  std::string action;
};

/// Full `branching`-ary tree of the given depth where level l carries
/// word[l]. Node ids are "0", "0.0", "0.1", ... Requires depth < word.size().
FiniteTree gen_rword_tree(const Signature& sig, std::span<const WordLetter> word, std::size_t branching,
                          std::size_t depth);

/// All nodes on a level share their colors and all edges leaving a level
/// share one action. All leaves sit on the last level, which is the
/// truncation depth and carries no action constraint.
bool is_rword(const FiniteTree& tree);

/// Least level n whose nodes all carry `color`, if any.
std::optional<std::size_t> check_luni(const FiniteTree& tree, const std::string& color = "f");

struct RelativeVerdict {
  bool in_r = false;
  bool models = false;
  /// Reference verdict for L; only present for trees in R.
  std::optional<bool> in_l;

  /// No claim outside R; inside R the formula must match L.
  bool consistent() const { return !in_r || !in_l || *in_l == models; }
};

/// Evaluates the closed arity-1 formula on every tree and pairs it with the
/// R test and, inside R, with the reference L test when one is given.
std::vector<RelativeVerdict> check_relative_membership(
    const Formula& f, const std::function<bool(const FiniteTree&)>& in_r, const std::vector<FiniteTree>& trees,
    const std::function<bool(const FiniteTree&)>& in_l = {});

}  // namespace polymu
