#include "polymu/random.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "polymu/transforms.hpp"

namespace polymu {

std::size_t Rng::below(std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return static_cast<std::size_t>(x % bound);
  }
}

namespace {

std::vector<std::string> numbered_ids(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = std::to_string(v);
  return ids;
}

std::vector<ColorSet> labels_of(const LabeledGraph& g) {
  std::vector<ColorSet> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) out.push_back(g.label(v));
  return out;
}

std::vector<std::string> ids_of(const LabeledGraph& g) {
  std::vector<std::string> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) out.push_back(g.node_id(v));
  return out;
}

std::string fresh_id(const std::vector<std::string>& ids, const std::string& base) {
  std::string id = base + "'";
  while (std::find(ids.begin(), ids.end(), id) != ids.end()) id += "'";
  return id;
}

class FormulaGen {
 public:
  FormulaGen(Rng& rng, const Signature& sig, const FormulaShape& shape) : rng_(rng), sig_(sig), shape_(shape) {
    d_ = shape.d_rooted ? shape.arity - 1 : shape.arity;
  }

  Formula run() { return gen(shape_.size, 0); }

 private:
  struct Bound {
    std::string name;
    unsigned parity;
  };

  std::size_t index() { return rng_.below(d_); }

  Formula leaf(unsigned negations) {
    std::vector<std::size_t> usable;
    for (std::size_t k = 0; k < scope_.size(); ++k)
      if (scope_[k].parity == negations % 2) usable.push_back(k);
    std::size_t pick = rng_.below(usable.empty() ? 8 : 12);
    if (pick >= 8) return var(scope_[usable[rng_.below(usable.size())]].name);
    if (pick == 0) return tt();
    if (pick == 1) return ff();
    const std::string& c = sig_.colors()[rng_.below(sig_.num_colors())];
    return color(c, index());
  }

  Formula reset(std::size_t size, unsigned negations) {
    std::size_t j = rng_.below(d_);
    Formula body = gen(size - 1, negations);
    return replace(reset_map(j, d_), body);
  }

  Formula modal(std::size_t size, unsigned negations) {
    const std::string& a = sig_.actions()[rng_.below(sig_.num_actions())];
    bool dia = rng_.chance(1, 2);
    if (!shape_.reset_boxes && a.rfind("rst@", 0) == 0) dia = true;
    Formula body = gen(size - 1, negations);
    std::size_t i = index();
    return dia ? diamond(a, i, body) : box(a, i, body);
  }

  Formula gen(std::size_t size, unsigned negations) {
    if (size <= 1) return leaf(negations);
    // Unary constructors: ~, modality, fixpoint, and [j<-d] for d-rooted shapes.
    std::size_t kinds = size >= 3 ? 6 : 4;
    std::size_t pick = rng_.below(kinds);
    switch (pick) {
      case 0: return neg(gen(size - 1, negations + 1));
      case 1:
      case 2: return modal(size, negations);
      case 3:
        if (shape_.fixpoints && size >= 2) {
          std::string x = "X" + std::to_string(counter_++);
          scope_.push_back({x, negations % 2});
          Formula body = gen(size - 1, negations);
          scope_.pop_back();
          return rng_.chance(1, 2) ? mu(x, body) : nu(x, body);
        }
        if (shape_.d_rooted) return reset(size, negations);
        return modal(size, negations);
      default: {
        if (shape_.d_rooted && rng_.chance(1, 4)) return reset(size, negations);
        std::size_t left = rng_.between(1, size - 2);
        Formula l = gen(left, negations);
        Formula r = gen(size - 1 - left, negations);
        return rng_.chance(1, 2) ? conj(l, r) : disj(l, r);
      }
    }
  }

  Rng& rng_;
  const Signature& sig_;
  FormulaShape shape_;
  std::size_t d_ = 1;
  std::vector<Bound> scope_;
  std::size_t counter_ = 0;
};

}  // namespace

LabeledGraph random_graph(Rng& rng, const Signature& sig, std::size_t max_nodes, std::size_t edge_num,
                          std::size_t edge_den) {
  const std::size_t n = rng.between(1, max_nodes);
  std::vector<ColorSet> labels(n);
  for (NodeId v = 0; v < n; ++v)
    for (ColorId c = 0; c < sig.num_colors(); ++c)
      if (rng.chance(1, 2)) labels[v].push_back(c);
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v)
    for (ActionId a = 0; a < sig.num_actions(); ++a)
      for (NodeId w = 0; w < n; ++w)
        if (rng.chance(edge_num, edge_den * n)) edges.push_back({v, a, w});
  return LabeledGraph(sig, numbered_ids(n), std::move(labels), 0, std::move(edges));
}

LabeledGraph split_nodes(Rng& rng, const LabeledGraph& g, std::size_t splits) {
  std::vector<std::string> ids = ids_of(g);
  std::vector<ColorSet> labels = labels_of(g);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t s = 0; s < splits; ++s) {
    const NodeId v = rng.below(ids.size());
    const NodeId copy = ids.size();
    ids.push_back(fresh_id(ids, ids[v]));
    labels.push_back(labels[v]);
    std::vector<Edge> added;
    for (Edge& e : edges) {
      if (e.from == v) added.push_back({copy, e.action, e.to == v && rng.chance(1, 2) ? copy : e.to});
      if (e.to == v && rng.chance(1, 2)) e.to = copy;
    }
    edges.insert(edges.end(), added.begin(), added.end());
  }
  return LabeledGraph(g.signature(), std::move(ids), std::move(labels), g.root(), std::move(edges));
}

LabeledGraph perturb(Rng& rng, const LabeledGraph& g) {
  std::vector<ColorSet> labels = labels_of(g);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const std::size_t n = g.num_nodes();
  switch (rng.below(3)) {
    case 0:
      edges.push_back({rng.below(n), rng.below(g.signature().num_actions()), rng.below(n)});
      break;
    case 1:
      if (!edges.empty()) {
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
        break;
      }
      [[fallthrough]];
    default: {
      NodeId v = rng.below(n);
      ColorId c = rng.below(g.signature().num_colors());
      auto& l = labels[v];
      auto it = std::find(l.begin(), l.end(), c);
      if (it == l.end()) l.insert(std::upper_bound(l.begin(), l.end(), c), c);
      else l.erase(it);
    }
  }
  return LabeledGraph(g.signature(), ids_of(g), std::move(labels), g.root(), std::move(edges));
}

Formula random_formula(Rng& rng, const Signature& sig, const FormulaShape& shape) {
  return FormulaGen(rng, sig, shape).run();
}

FiniteTree random_spine_tree(Rng& rng, const Signature& sig, std::size_t spine, std::size_t branch_depth) {
  std::vector<std::string> ids;
  std::vector<ColorSet> labels;
  std::vector<Edge> edges;
  auto add = [&](NodeId parent, std::size_t depth) {
    NodeId v = ids.size();
    ids.push_back(std::to_string(v));
    ColorSet l;
    for (ColorId c = 0; c < sig.num_colors(); ++c)
      if (rng.chance(1, 2)) l.push_back(c);
    labels.push_back(std::move(l));
    if (depth > 0) edges.push_back({parent, rng.below(sig.num_actions()), v});
    return v;
  };
  std::vector<NodeId> path;
  for (std::size_t k = 0; k < spine; ++k) path.push_back(add(k == 0 ? 0 : path.back(), k));
  std::vector<std::pair<NodeId, std::size_t>> frontier;
  for (NodeId v : path) frontier.push_back({v, 0});
  for (std::size_t f = 0; f < frontier.size(); ++f) {
    auto [v, level] = frontier[f];
    if (level >= branch_depth) continue;
    while (rng.chance(1, 3)) frontier.push_back({add(v, 1), level + 1});
  }
  return FiniteTree(LabeledGraph(sig, std::move(ids), std::move(labels), 0, std::move(edges)));
}

}  // namespace polymu
