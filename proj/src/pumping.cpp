#include "polymu/pumping.hpp"

#include "polymu/error.hpp"
#include "polymu/eval.hpp"

namespace polymu {
namespace {

void check_pump_args(const FiniteTree& tree, std::span<const NodeId> path, std::size_t i, std::size_t j) {
  if (!tree.is_root_path(path)) throw InputError("not a root path of the tree", "path");
  if (!(0 < i && i < j && j < path.size()))
    throw InputError("need 0 < i < j < " + std::to_string(path.size()), "indices");
}

std::string copy_id(const std::string& id, std::size_t k) { return "(" + id + "," + std::to_string(k) + ")"; }

}  // namespace

PumpPartition partition_nodes(const FiniteTree& tree, std::span<const NodeId> path, std::size_t i,
                              std::size_t j) {
  check_pump_args(tree, path, i, j);
  PumpPartition p;
  for (NodeId v = 0; v < tree.num_nodes(); ++v) {
    if (tree.is_ancestor(path[j], v)) p.after.push_back(v);
    else if (tree.is_ancestor(path[i], v)) p.pumped.push_back(v);
    else p.before.push_back(v);
  }
  return p;
}

FiniteTree pump(const FiniteTree& tree, std::span<const NodeId> path, std::size_t i, std::size_t j,
                std::size_t k) {
  PumpPartition part = partition_nodes(tree, path, i, j);
  const LabeledGraph& g = tree.graph();
  const auto& actions = g.signature().actions();
  std::vector<char> in_p(g.num_nodes(), 0);
  for (NodeId v : part.pumped) in_p[v] = 1;

  GraphBuilder b(g.signature());
  b.node(g.node_id(g.root()), color_names(g, g.root()));
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (!in_p[v] && v != g.root()) b.node(g.node_id(v), color_names(g, v));
  for (std::size_t c = 0; c < k; ++c)
    for (NodeId v : part.pumped) b.node(copy_id(g.node_id(v), c), color_names(g, v));

  const NodeId vi = path[i], vj = path[j], before_i = path[i - 1], before_j = path[j - 1];
  const std::string& entry = actions[tree.parent_action(vi)];
  const std::string& exit = actions[tree.parent_action(vj)];
  for (const Edge& e : g.edges()) {
    const std::string& a = actions[e.action];
    if (!in_p[e.from] && !in_p[e.to]) b.edge(g.node_id(e.from), a, g.node_id(e.to));
    if (in_p[e.from] && in_p[e.to])
      for (std::size_t c = 0; c < k; ++c) b.edge(copy_id(g.node_id(e.from), c), a, copy_id(g.node_id(e.to), c));
  }
  for (std::size_t c = 0; c + 1 < k; ++c) b.edge(copy_id(g.node_id(before_j), c), exit, copy_id(g.node_id(vi), c + 1));
  if (k > 0) {
    b.edge(g.node_id(before_i), entry, copy_id(g.node_id(vi), 0));
    b.edge(copy_id(g.node_id(before_j), k - 1), exit, g.node_id(vj));
  } else {
    b.edge(g.node_id(before_i), entry, g.node_id(vj));
  }
  return FiniteTree(b.build());
}

FiniteTree gen_rword_tree(const Signature& sig, std::span<const WordLetter> word, std::size_t branching,
                          std::size_t depth) {
  if (depth >= word.size())
    throw InputError("depth " + std::to_string(depth) + " needs a word of more than " + std::to_string(depth) +
                         " letters",
                     "depth");
  GraphBuilder b(sig);
  std::vector<std::string> level{"0"};
  b.node("0", word[0].colors);
  for (std::size_t l = 0; l < depth; ++l) {
    std::vector<std::string> next;
    for (const auto& parent : level) {
      for (std::size_t c = 0; c < branching; ++c) {
        std::string id = parent + "." + std::to_string(c);
        b.node(id, word[l + 1].colors);
        b.edge(parent, word[l].action, id);
        next.push_back(std::move(id));
      }
    }
    level = std::move(next);
  }
  return FiniteTree(b.build());
}

bool is_rword(const FiniteTree& tree) {
  const LabeledGraph& g = tree.graph();
  const std::size_t h = tree.height();
  std::vector<std::optional<ColorSet>> labels(h + 1);
  std::vector<std::optional<ActionId>> action(h + 1);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const std::size_t l = tree.depth(v);
    if (!labels[l]) labels[l] = g.label(v);
    else if (*labels[l] != g.label(v)) return false;
    if (tree.children(v).empty()) {
      if (l != h) return false;
      continue;
    }
    for (NodeId c : tree.children(v)) {
      ActionId a = tree.parent_action(c);
      if (!action[l]) action[l] = a;
      else if (*action[l] != a) return false;
    }
  }
  return true;
}

std::optional<std::size_t> check_luni(const FiniteTree& tree, const std::string& color) {
  const LabeledGraph& g = tree.graph();
  auto c = g.signature().find_color(color);
  if (!c) throw InputError("unknown color '" + color + "'", "color");
  std::vector<char> all(tree.height() + 1, 1);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (!g.has_color(v, *c)) all[tree.depth(v)] = 0;
  for (std::size_t n = 0; n < all.size(); ++n)
    if (all[n]) return n;
  return std::nullopt;
}

std::vector<RelativeVerdict> check_relative_membership(const Formula& f,
                                                       const std::function<bool(const FiniteTree&)>& in_r,
                                                       const std::vector<FiniteTree>& trees,
                                                       const std::function<bool(const FiniteTree&)>& in_l) {
  std::vector<RelativeVerdict> out;
  for (const auto& t : trees) {
    RelativeVerdict r;
    r.in_r = in_r(t);
    r.models = models(t.graph(), f, 1);
    if (r.in_r && in_l) r.in_l = in_l(t);
    out.push_back(r);
  }
  return out;
}

}  // namespace polymu
