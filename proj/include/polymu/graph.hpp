#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "polymu/signature.hpp"

namespace polymu {

using NodeId = std::size_t;
using ColorSet = std::vector<ColorId>;  // sorted, unique

struct Edge {
  NodeId from = 0;
  ActionId action = 0;
  NodeId to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite rooted (Σ,Col)-graph. Immutable once built; the constructor
/// validates every invariant and throws InputError on violation.
class LabeledGraph {
 public:
  LabeledGraph(Signature signature, std::vector<std::string> node_ids, std::vector<ColorSet> labels,
               NodeId root, std::vector<Edge> edges);

  const Signature& signature() const noexcept { return signature_; }
  std::size_t num_nodes() const noexcept { return ids_.size(); }
  NodeId root() const noexcept { return root_; }
  const std::string& node_id(NodeId v) const { return ids_[v]; }
  const std::vector<std::string>& node_ids() const noexcept { return ids_; }
  std::optional<NodeId> find_node(std::string_view id) const;

  const ColorSet& label(NodeId v) const { return labels_[v]; }
  bool has_color(NodeId v, ColorId c) const;

  /// Sorted, duplicate-free edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted targets of `a`-edges leaving `v`.
  std::span<const NodeId> successors(NodeId v, ActionId a) const { return succ_[a][v]; }
  /// Sorted sources of `a`-edges entering `v`.
  std::span<const NodeId> predecessors(NodeId v, ActionId a) const { return pred_[a][v]; }

 private:
  Signature signature_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<ColorSet> labels_;
  NodeId root_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::vector<NodeId>>> succ_;  // [action][node]
  std::vector<std::vector<std::vector<NodeId>>> pred_;
};

/// Name-based incremental construction. The first node added is the root
/// unless set_root() says otherwise.
class GraphBuilder {
 public:
  explicit GraphBuilder(Signature signature) : signature_(std::move(signature)) {}

  GraphBuilder& node(std::string id, std::vector<std::string> colors = {});
  GraphBuilder& edge(std::string_view from, std::string_view action, std::string_view to);
  GraphBuilder& root(std::string id);

  LabeledGraph build() const;

 private:
  Signature signature_;
  std::vector<std::string> ids_;
  std::vector<std::vector<std::string>> colors_;
  std::vector<std::tuple<std::string, std::string, std::string>> edges_;
  std::optional<std::string> root_;
};

/// A LabeledGraph whose edges form a tree below the root.
class FiniteTree {
 public:
  static constexpr NodeId kNoParent = static_cast<NodeId>(-1);

  /// Throws InputError if `g` is not tree-shaped.
  explicit FiniteTree(LabeledGraph g);

  const LabeledGraph& graph() const noexcept { return graph_; }
  NodeId root() const noexcept { return graph_.root(); }
  std::size_t num_nodes() const noexcept { return graph_.num_nodes(); }
  NodeId parent(NodeId v) const { return parent_[v]; }
  ActionId parent_action(NodeId v) const { return parent_action_[v]; }
  std::size_t depth(NodeId v) const { return depth_[v]; }
  std::size_t height() const noexcept { return height_; }
  const std::vector<NodeId>& children(NodeId v) const { return children_[v]; }

  /// Nodes from the root down to `v`, inclusive.
  std::vector<NodeId> root_path(NodeId v) const;
  /// True iff `ancestor` lies on the root path of `v` (reflexive).
  bool is_ancestor(NodeId ancestor, NodeId v) const;
  /// True iff `path` starts at the root and each step follows an edge.
  bool is_root_path(std::span<const NodeId> path) const;

 private:
  LabeledGraph graph_;
  std::vector<NodeId> parent_;
  std::vector<ActionId> parent_action_;
  std::vector<std::size_t> depth_;
  std::vector<std::vector<NodeId>> children_;
  std::size_t height_ = 0;
};

/// d-dimensional asynchronous product with reset edges; d = factors.size().
LabeledGraph product(std::span<const LabeledGraph> factors);
/// product of d copies of g.
LabeledGraph power(const LabeledGraph& g, std::size_t d);

/// Depth-bounded prefix of the tree unfolding: one node per edge path of
/// length <= depth.
FiniteTree unfold(const LabeledGraph& g, std::size_t depth);

/// The subgraph induced by nodes reachable from the root over any action.
LabeledGraph reachable_part(const LabeledGraph& g);

/// String that is equal for two trees iff they are isomorphic
/// (labels, actions and child multisets respected).
std::string canonical_form(const FiniteTree& t);

/// Color names of a node, in signature order.
std::vector<std::string> color_names(const LabeledGraph& g, NodeId v);

}  // namespace polymu
