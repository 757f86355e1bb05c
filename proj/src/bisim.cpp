#include "polymu/bisim.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polymu/error.hpp"

namespace polymu {
namespace {

void require_same_signature(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (!(g1.signature() == g2.signature())) throw InputError("graphs have different signatures", "signature");
}

Relation label_consistent(const LabeledGraph& g1, const LabeledGraph& g2) {
  Relation r(g1.num_nodes(), g2.num_nodes());
  for (NodeId u = 0; u < g1.num_nodes(); ++u)
    for (NodeId v = 0; v < g2.num_nodes(); ++v)
      if (g1.label(u) == g2.label(v)) r.set(u, v);
  return r;
}

// Forth and Back for (u, v) with respect to `r`.
bool transfers(const Relation& r, const LabeledGraph& g1, const LabeledGraph& g2, NodeId u, NodeId v) {
  for (ActionId a = 0; a < g1.signature().num_actions(); ++a) {
    auto su = g1.successors(u, a);
    auto sv = g2.successors(v, a);
    for (NodeId u2 : su)
      if (std::none_of(sv.begin(), sv.end(), [&](NodeId v2) { return r.contains(u2, v2); })) return false;
    for (NodeId v2 : sv)
      if (std::none_of(su.begin(), su.end(), [&](NodeId u2) { return r.contains(u2, v2); })) return false;
  }
  return true;
}

}  // namespace

Relation largest_bisimulation(const LabeledGraph& g1, const LabeledGraph& g2) {
  require_same_signature(g1, g2);
  Relation r = label_consistent(g1, g2);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : r.pairs()) {
      if (!transfers(r, g1, g2, u, v)) {
        r.set(u, v, false);
        changed = true;
      }
    }
  }
  return r;
}

Relation bounded_bisimulation(const LabeledGraph& g1, const LabeledGraph& g2, std::size_t k) {
  require_same_signature(g1, g2);
  Relation r = label_consistent(g1, g2);
  for (std::size_t round = 0; round < k; ++round) {
    Relation next = r;
    for (auto [u, v] : r.pairs())
      if (!transfers(r, g1, g2, u, v)) next.set(u, v, false);
    if (next == r) break;
    r = std::move(next);
  }
  return r;
}

bool is_bisimulation(const Relation& r, const LabeledGraph& g1, const LabeledGraph& g2) {
  for (auto [u, v] : r.pairs())
    if (g1.label(u) != g2.label(v) || !transfers(r, g1, g2, u, v)) return false;
  return true;
}

bool bisimilar(const LabeledGraph& g1, const LabeledGraph& g2) {
  return largest_bisimulation(g1, g2).contains(g1.root(), g2.root());
}

std::vector<std::size_t> bisimulation_classes(const LabeledGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> cls(n, 0);
  {
    std::map<ColorSet, std::size_t> by_label;
    for (NodeId v = 0; v < n; ++v) cls[v] = by_label.emplace(g.label(v), by_label.size()).first->second;
  }
  std::size_t count = 0;
  for (;;) {
    using Key = std::pair<std::size_t, std::set<std::pair<ActionId, std::size_t>>>;
    std::map<Key, std::size_t> keys;
    std::vector<std::size_t> next(n);
    for (NodeId v = 0; v < n; ++v) {
      Key key{cls[v], {}};
      for (ActionId a = 0; a < g.signature().num_actions(); ++a)
        for (NodeId w : g.successors(v, a)) key.second.emplace(a, cls[w]);
      next[v] = keys.emplace(std::move(key), keys.size()).first->second;
    }
    cls = std::move(next);
    if (keys.size() == count) break;
    count = keys.size();
  }
  // Renumber by least member id.
  std::vector<std::string> least(count);
  std::vector<bool> has(count, false);
  for (NodeId v = 0; v < n; ++v)
    if (!has[cls[v]] || g.node_id(v) < least[cls[v]]) {
      least[cls[v]] = g.node_id(v);
      has[cls[v]] = true;
    }
  std::vector<std::size_t> order(count);
  for (std::size_t c = 0; c < count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return least[a] < least[b]; });
  std::vector<std::size_t> rank(count);
  for (std::size_t k = 0; k < count; ++k) rank[order[k]] = k;
  for (auto& c : cls) c = rank[c];
  return cls;
}

LabeledGraph quotient(const LabeledGraph& g) {
  auto cls = bisimulation_classes(g);
  std::size_t count = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::string> ids(count);
  std::vector<bool> named(count, false);
  std::vector<ColorSet> labels(count);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto c = cls[v];
    if (!named[c] || g.node_id(v) < ids[c]) {
      ids[c] = g.node_id(v);
      named[c] = true;
    }
    labels[c] = g.label(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({cls[e.from], e.action, cls[e.to]});
  return LabeledGraph(g.signature(), std::move(ids), std::move(labels), cls[g.root()], std::move(edges));
}

}  // namespace polymu
