#include "polymu/acceptance.hpp"

#include <map>

#include "polymu/error.hpp"

namespace polymu {

ParityGame build_acceptance_game(const Apt& apt, const LabeledGraph& g) {
  if (!(apt.signature == g.signature())) throw InputError("automaton and graph signatures differ", "signature");
  using K = Transition::Kind;
  const std::size_t q_count = apt.num_states();
  ParityGame game;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (StateId q = 0; q < q_count; ++q) {
      const Transition& t = apt.delta[q];
      Player who = Player::kExists;
      switch (t.kind) {
        case K::kColor:
          who = g.has_color(v, t.symbol) ? Player::kForall : Player::kExists;
          break;
        case K::kNotColor:
          who = g.has_color(v, t.symbol) ? Player::kExists : Player::kForall;
          break;
        case K::kDiamond:
        case K::kOr: who = Player::kExists; break;
        case K::kBox:
        case K::kAnd: who = Player::kForall; break;
      }
      std::size_t pos = game.add(who, apt.priority[q]);
      switch (t.kind) {
        case K::kDiamond:
        case K::kBox:
          for (NodeId w : g.successors(v, t.symbol)) game.moves[pos].push_back(w * q_count + t.left);
          break;
        case K::kOr:
        case K::kAnd:
          game.moves[pos].push_back(v * q_count + t.left);
          if (t.right != t.left) game.moves[pos].push_back(v * q_count + t.right);
          break;
        default: break;
      }
    }
  }
  game.initial = g.root() * q_count + apt.initial;
  return game;
}

bool accepts(const Apt& apt, const LabeledGraph& g) {
  ParityGame game = build_acceptance_game(apt, g);
  return solve_parity(game).winner[game.initial] == Player::kExists;
}

std::vector<std::set<StateId>> winning_state_sets(const Apt& apt, const FiniteTree& tree,
                                                  std::span<const NodeId> path) {
  if (!tree.is_root_path(path)) throw InputError("not a root path of the tree", "path");
  ParityGame game = build_acceptance_game(apt, tree.graph());
  ParitySolution sol = solve_parity(game);
  const std::size_t q_count = apt.num_states();
  std::vector<std::set<StateId>> out;
  for (NodeId v : path) {
    std::set<StateId> s;
    for (StateId q = 0; q < q_count; ++q)
      if (sol.winner[v * q_count + q] == Player::kExists) s.insert(q);
    out.push_back(std::move(s));
  }
  return out;
}

std::pair<std::size_t, std::size_t> find_pumping_pair(const Apt& apt, const FiniteTree& tree,
                                                      std::span<const NodeId> path) {
  if (!accepts(apt, tree.graph())) throw InputError("tree rejected by the automaton", "tree");
  auto sets = winning_state_sets(apt, tree, path);
  const std::size_t q_count = apt.num_states();
  const std::size_t bound = q_count >= 20 ? sets.size() : (std::size_t{1} << q_count) + 1;
  std::map<std::set<StateId>, std::size_t> first;
  for (std::size_t j = 1; j < sets.size() && j <= bound; ++j) {
    auto [it, fresh] = first.emplace(sets[j], j);
    if (!fresh) return {it->second, j};
  }
  throw InputError("path too short: no repeated state set within " + std::to_string(sets.size()) + " nodes", "path");
}

}  // namespace polymu
