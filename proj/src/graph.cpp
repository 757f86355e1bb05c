#include "polymu/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "polymu/error.hpp"

namespace polymu {

LabeledGraph::LabeledGraph(Signature signature, std::vector<std::string> node_ids,
                           std::vector<ColorSet> labels, NodeId root, std::vector<Edge> edges)
    : signature_(std::move(signature)),
      ids_(std::move(node_ids)),
      labels_(std::move(labels)),
      root_(root),
      edges_(std::move(edges)) {
  const std::size_t n = ids_.size();
  if (n == 0) throw InputError("graph has no nodes", "nodes");
  if (labels_.size() != n) throw InputError("labeling must cover every node", "nodes");
  for (NodeId v = 0; v < n; ++v) {
    if (!index_.emplace(ids_[v], v).second)
      throw InputError("duplicate node id '" + ids_[v] + "'", "nodes[" + std::to_string(v) + "]");
    auto& l = labels_[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    for (ColorId c : l)
      if (c >= signature_.num_colors())
        throw InputError("unknown color index " + std::to_string(c), "nodes[" + std::to_string(v) + "].colors");
  }
  if (root_ >= n) throw InputError("root is not a node", "root");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  succ_.assign(signature_.num_actions(), std::vector<std::vector<NodeId>>(n));
  pred_.assign(signature_.num_actions(), std::vector<std::vector<NodeId>>(n));
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.from >= n || e.to >= n) throw InputError("edge endpoint is not a node", "edges[" + std::to_string(k) + "]");
    if (e.action >= signature_.num_actions())
      throw InputError("unknown action index " + std::to_string(e.action), "edges[" + std::to_string(k) + "]");
    succ_[e.action][e.from].push_back(e.to);
    pred_[e.action][e.to].push_back(e.from);
  }
  for (auto& per_action : pred_)
    for (auto& p : per_action) std::sort(p.begin(), p.end());
}

std::optional<NodeId> LabeledGraph::find_node(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool LabeledGraph::has_color(NodeId v, ColorId c) const {
  return std::binary_search(labels_[v].begin(), labels_[v].end(), c);
}

GraphBuilder& GraphBuilder::node(std::string id, std::vector<std::string> colors) {
  ids_.push_back(std::move(id));
  colors_.push_back(std::move(colors));
  return *this;
}

GraphBuilder& GraphBuilder::edge(std::string_view from, std::string_view action, std::string_view to) {
  edges_.emplace_back(std::string(from), std::string(action), std::string(to));
  return *this;
}

GraphBuilder& GraphBuilder::root(std::string id) {
  root_ = std::move(id);
  return *this;
}

LabeledGraph GraphBuilder::build() const {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < ids_.size(); ++v) index.emplace(ids_[v], v);
  auto lookup = [&](const std::string& id, const std::string& where) {
    auto it = index.find(id);
    if (it == index.end()) throw InputError("unknown node '" + id + "'", where);
    return it->second;
  };
  std::vector<ColorSet> labels(ids_.size());
  for (NodeId v = 0; v < ids_.size(); ++v) {
    for (const auto& c : colors_[v]) {
      auto cid = signature_.find_color(c);
      if (!cid) throw InputError("unknown color '" + c + "'", "nodes[" + std::to_string(v) + "].colors");
      labels[v].push_back(*cid);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& [f, a, t] = edges_[k];
    std::string where = "edges[" + std::to_string(k) + "]";
    auto aid = signature_.find_action(a);
    if (!aid) throw InputError("unknown action '" + a + "'", where);
    edges.push_back({lookup(f, where), *aid, lookup(t, where)});
  }
  NodeId r = 0;
  if (root_) r = lookup(*root_, "root");
  else if (ids_.empty()) throw InputError("graph has no nodes", "nodes");
  return LabeledGraph(signature_, ids_, std::move(labels), r, std::move(edges));
}

FiniteTree::FiniteTree(LabeledGraph g) : graph_(std::move(g)) {
  const std::size_t n = graph_.num_nodes();
  parent_.assign(n, kNoParent);
  parent_action_.assign(n, 0);
  depth_.assign(n, 0);
  children_.assign(n, {});
  for (const Edge& e : graph_.edges()) {
    if (e.to == graph_.root()) throw InputError("root has an incoming edge", "edges");
    if (parent_[e.to] != kNoParent)
      throw InputError("node '" + graph_.node_id(e.to) + "' has two incoming edges", "edges");
    parent_[e.to] = e.from;
    parent_action_[e.to] = e.action;
    children_[e.from].push_back(e.to);
  }
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue{graph_.root()};
  seen[graph_.root()] = true;
  std::size_t visited = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    ++visited;
    height_ = std::max(height_, depth_[v]);
    for (NodeId c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      seen[c] = true;
      queue.push_back(c);
    }
  }
  if (visited != n) throw InputError("not every node is reachable from the root", "edges");
}

std::vector<NodeId> FiniteTree::root_path(NodeId v) const {
  std::vector<NodeId> path;
  for (NodeId u = v; u != kNoParent; u = parent_[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

bool FiniteTree::is_ancestor(NodeId ancestor, NodeId v) const {
  if (depth_[ancestor] > depth_[v]) return false;
  while (depth_[v] > depth_[ancestor]) v = parent_[v];
  return v == ancestor;
}

bool FiniteTree::is_root_path(std::span<const NodeId> path) const {
  if (path.empty() || path.front() != root()) return false;
  for (std::size_t k = 1; k < path.size(); ++k)
    if (path[k] >= num_nodes() || parent_[path[k]] != path[k - 1]) return false;
  return true;
}

LabeledGraph product(std::span<const LabeledGraph> factors) {
  if (factors.empty()) throw InputError("product of zero factors", "factors");
  const Signature& base = factors.front().signature();
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!(factors[i].signature() == base))
      throw InputError("factor signature differs from factor 0", "factors[" + std::to_string(i) + "]");
  const std::size_t d = factors.size();
  Signature lifted = lift_signature(base, d);
  LiftedSignature ls = LiftedSignature::detect(lifted);

  // Mixed-radix numbering, component 0 most significant.
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t i = d - 1; i > 0; --i) stride[i - 1] = stride[i] * factors[i].num_nodes();
  const std::size_t total = stride[0] * factors[0].num_nodes();

  std::vector<std::string> ids(total);
  std::vector<ColorSet> labels(total);
  std::vector<Edge> edges;
  std::vector<NodeId> tuple(d);
  for (NodeId v = 0; v < total; ++v) {
    std::size_t rest = v;
    std::string id = "(";
    for (std::size_t i = 0; i < d; ++i) {
      tuple[i] = rest / stride[i];
      rest %= stride[i];
      if (i) id += ',';
      id += factors[i].node_id(tuple[i]);
    }
    ids[v] = id + ")";
    for (std::size_t i = 0; i < d; ++i) {
      for (ColorId c : factors[i].label(tuple[i])) labels[v].push_back(ls.color[c][i]);
      for (ActionId a = 0; a < base.num_actions(); ++a)
        for (NodeId t : factors[i].successors(tuple[i], a))
          edges.push_back({v, ls.action[a][i], v + (t - tuple[i]) * stride[i]});
      NodeId r = factors[i].root();
      edges.push_back({v, ls.reset[i], v - tuple[i] * stride[i] + r * stride[i]});
    }
  }
  NodeId root = 0;
  for (std::size_t i = 0; i < d; ++i) root += factors[i].root() * stride[i];
  return LabeledGraph(std::move(lifted), std::move(ids), std::move(labels), root, std::move(edges));
}

LabeledGraph power(const LabeledGraph& g, std::size_t d) {
  if (d == 0) throw InputError("dimension must be positive", "d");
  std::vector<LabeledGraph> copies(d, g);
  return product(copies);
}

FiniteTree unfold(const LabeledGraph& g, std::size_t depth) {
  std::vector<std::string> ids{g.node_id(g.root())};
  std::vector<ColorSet> labels{g.label(g.root())};
  std::vector<NodeId> origin{g.root()};
  std::vector<std::size_t> level{0};
  std::vector<Edge> edges;
  for (NodeId t = 0; t < origin.size(); ++t) {
    if (level[t] == depth) continue;
    for (ActionId a = 0; a < g.signature().num_actions(); ++a) {
      for (NodeId w : g.successors(origin[t], a)) {
        NodeId child = ids.size();
        ids.push_back(ids[t] + "/" + g.signature().actions()[a] + ":" + g.node_id(w));
        labels.push_back(g.label(w));
        origin.push_back(w);
        level.push_back(level[t] + 1);
        edges.push_back({t, a, child});
      }
    }
  }
  return FiniteTree(LabeledGraph(g.signature(), std::move(ids), std::move(labels), 0, std::move(edges)));
}

LabeledGraph reachable_part(const LabeledGraph& g) {
  std::vector<NodeId> remap(g.num_nodes(), FiniteTree::kNoParent);
  std::vector<NodeId> order{g.root()};
  remap[g.root()] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (ActionId a = 0; a < g.signature().num_actions(); ++a)
      for (NodeId w : g.successors(order[k], a))
        if (remap[w] == FiniteTree::kNoParent) {
          remap[w] = order.size();
          order.push_back(w);
        }
  std::vector<std::string> ids;
  std::vector<ColorSet> labels;
  for (NodeId v : order) {
    ids.push_back(g.node_id(v));
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (remap[e.from] != FiniteTree::kNoParent) edges.push_back({remap[e.from], e.action, remap[e.to]});
  return LabeledGraph(g.signature(), std::move(ids), std::move(labels), 0, std::move(edges));
}

std::string canonical_form(const FiniteTree& t) {
  const LabeledGraph& g = t.graph();
  std::function<std::string(NodeId)> rec = [&](NodeId v) {
    std::string out = "{";
    for (ColorId c : g.label(v)) out += g.signature().colors()[c] + ",";
    out += "|";
    std::vector<std::string> kids;
    for (NodeId c : t.children(v)) kids.push_back(g.signature().actions()[t.parent_action(c)] + rec(c));
    std::sort(kids.begin(), kids.end());
    for (auto& k : kids) out += k;
    return out + "}";
  };
  return rec(t.root());
}

std::vector<std::string> color_names(const LabeledGraph& g, NodeId v) {
  std::vector<std::string> out;
  for (ColorId c : g.label(v)) out.push_back(g.signature().colors()[c]);
  return out;
}

}  // namespace polymu
