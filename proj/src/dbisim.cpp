#include "polymu/dbisim.hpp"

#include <algorithm>

#include "polymu/error.hpp"
#include "polymu/signature.hpp"

namespace polymu {
namespace {

struct LiftedEdgeKind {
  bool reset = false;
  std::size_t component = 0;
};

std::vector<LiftedEdgeKind> classify_actions(const LiftedSignature& ls, std::size_t num_actions) {
  std::vector<LiftedEdgeKind> kinds(num_actions);
  for (std::size_t i = 0; i < ls.d; ++i) {
    for (const auto& per_component : ls.action) kinds[per_component[i]] = {false, i};
    kinds[ls.reset[i]] = {true, i};
  }
  return kinds;
}

bool prop_ok(const LabeledGraph& g, const LiftedSignature& ls, std::size_t i, std::size_t j, NodeId u, NodeId v) {
  for (const auto& c : ls.color)
    if (g.has_color(u, c[i]) != g.has_color(v, c[j])) return false;
  return true;
}

bool transfer_ok(const Relation& r, const LabeledGraph& g, const LiftedSignature& ls, std::size_t i,
                 std::size_t j, NodeId u, NodeId v) {
  for (const auto& a : ls.action) {
    auto su = g.successors(u, a[i]);
    auto sv = g.successors(v, a[j]);
    for (NodeId u2 : su)
      if (std::none_of(sv.begin(), sv.end(), [&](NodeId v2) { return r.contains(u2, v2); })) return false;
    for (NodeId v2 : sv)
      if (std::none_of(su.begin(), su.end(), [&](NodeId u2) { return r.contains(u2, v2); })) return false;
  }
  return true;
}

}  // namespace

DBisimFamily largest_d_bisimulation(const LabeledGraph& g) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  const std::size_t n = g.num_nodes();
  DBisimFamily fam{ls.d, {}};
  for (std::size_t i = 0; i < ls.d; ++i) {
    for (std::size_t j = 0; j < ls.d; ++j) {
      Relation r(n, n);
      for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
          if (prop_ok(g, ls, i, j, u, v)) r.set(u, v);
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto [u, v] : r.pairs())
          if (!transfer_ok(r, g, ls, i, j, u, v)) {
            r.set(u, v, false);
            changed = true;
          }
      }
      fam.relations.push_back(std::move(r));
    }
  }
  return fam;
}

bool is_d_bisimulation(const DBisimFamily& fam, const LabeledGraph& g) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  if (ls.d != fam.d) return false;
  for (std::size_t i = 0; i < fam.d; ++i)
    for (std::size_t j = 0; j < fam.d; ++j)
      for (auto [u, v] : fam.at(i, j).pairs())
        if (!prop_ok(g, ls, i, j, u, v) || !transfer_ok(fam.at(i, j), g, ls, i, j, u, v)) return false;
  return true;
}

bool is_persistent(const LabeledGraph& g, const DBisimFamily& fam) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  auto kinds = classify_actions(ls, g.signature().num_actions());
  for (const Edge& e : g.edges()) {
    std::size_t i = kinds[e.action].component;
    for (std::size_t j = 0; j < fam.d; ++j)
      if (j != i && !fam.at(j, j).contains(e.from, e.to)) return false;
  }
  return true;
}

bool has_reset_property(const LabeledGraph& g, const DBisimFamily& fam) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  for (std::size_t i = 0; i < ls.d; ++i)
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      for (NodeId t : g.successors(v, ls.reset[i]))
        if (!fam.at(i, i).contains(t, g.root())) return false;
  return true;
}

bool is_power_rooted(const LabeledGraph& g, const DBisimFamily& fam) {
  for (const Relation& r : fam.relations)
    if (!r.contains(g.root(), g.root())) return false;
  return true;
}

LabeledGraph factor(const LabeledGraph& g, std::size_t i) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  if (i >= ls.d) throw InputError("component index out of range", "component");
  DBisimFamily fam = largest_d_bisimulation(g);
  if (!is_persistent(g, fam)) throw InputError("graph is not persistent", "graph");
  if (!has_reset_property(g, fam)) throw InputError("graph lacks the reset property", "graph");

  const Relation& eq = fam.at(i, i);
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> cls(n, static_cast<std::size_t>(-1));
  std::vector<NodeId> reps;
  for (NodeId v = 0; v < n; ++v) {
    if (cls[v] != static_cast<std::size_t>(-1)) continue;
    for (NodeId w = v; w < n; ++w)
      if (eq.contains(v, w)) cls[w] = reps.size();
    reps.push_back(v);
  }
  // Class names: least member id.
  std::vector<std::string> ids(reps.size());
  std::vector<bool> named(reps.size(), false);
  for (NodeId v = 0; v < n; ++v)
    if (!named[cls[v]] || g.node_id(v) < ids[cls[v]]) {
      ids[cls[v]] = g.node_id(v);
      named[cls[v]] = true;
    }
  std::vector<ColorSet> labels(reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (ColorId c = 0; c < ls.color.size(); ++c)
      if (g.has_color(reps[k], ls.color[c][i])) labels[k].push_back(c);
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v)
    for (ActionId a = 0; a < ls.action.size(); ++a)
      for (NodeId t : g.successors(v, ls.action[a][i])) edges.push_back({cls[v], a, cls[t]});
  return LabeledGraph(ls.base, std::move(ids), std::move(labels), cls[g.root()], std::move(edges));
}

std::vector<LabeledGraph> factors(const LabeledGraph& g) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  std::vector<LabeledGraph> out;
  for (std::size_t i = 0; i < ls.d; ++i) out.push_back(factor(g, i));
  return out;
}

}  // namespace polymu
