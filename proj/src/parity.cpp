#include "polymu/parity.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace polymu {

std::size_t ParityGame::add(Player who, unsigned prio) {
  owner.push_back(who);
  priority.push_back(prio);
  moves.emplace_back();
  return owner.size() - 1;
}

namespace {

using Mask = std::vector<char>;

struct Solver {
  const ParityGame& g;
  std::vector<std::vector<std::size_t>> preds;
  std::vector<std::optional<std::size_t>> strategy;

  explicit Solver(const ParityGame& game) : g(game), preds(game.size()), strategy(game.size()) {
    for (std::size_t v = 0; v < g.size(); ++v)
      for (std::size_t w : g.moves[v]) preds[w].push_back(v);
  }

  static Player parity_player(unsigned p) { return p % 2 == 0 ? Player::kExists : Player::kForall; }

  // Attractor of `target` for `who` inside `arena`; records attracting moves.
  Mask attractor(const Mask& arena, const Mask& target, Player who) {
    Mask attr = target;
    std::vector<std::size_t> remaining(g.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!arena[v]) continue;
      for (std::size_t w : g.moves[v])
        if (arena[w]) ++remaining[v];
      if (attr[v]) queue.push_back(v);
    }
    while (!queue.empty()) {
      std::size_t w = queue.front();
      queue.pop_front();
      for (std::size_t v : preds[w]) {
        if (!arena[v] || attr[v]) continue;
        if (g.owner[v] == who) {
          attr[v] = 1;
          strategy[v] = w;
          queue.push_back(v);
        } else if (--remaining[v] == 0) {
          attr[v] = 1;
          queue.push_back(v);
        }
      }
    }
    return attr;
  }

  // Returns the Exists-won part of `arena` (the rest is won by Forall) and
  // fills `strategy` for winners on their own positions.
  Mask solve(const Mask& arena) {
    Mask win_e(g.size(), 0);
    bool any = false;
    unsigned top = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (arena[v]) {
        any = true;
        top = std::max(top, g.priority[v]);
      }
    if (!any) return win_e;

    const Player alpha = parity_player(top);
    Mask target(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) target[v] = arena[v] && g.priority[v] == top;
    Mask attr = attractor(arena, target, alpha);

    Mask rest(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) rest[v] = arena[v] && !attr[v];
    Mask sub_e = solve(rest);

    Mask sub_opp(g.size(), 0);
    bool opp_empty = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      bool won_by_alpha = (alpha == Player::kExists) == static_cast<bool>(sub_e[v]);
      sub_opp[v] = rest[v] && !won_by_alpha;
      if (sub_opp[v]) opp_empty = false;
    }

    if (opp_empty) {
      // alpha wins everywhere; on top-priority alpha positions any move inside the arena will do.
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (!arena[v]) continue;
        if (target[v] && g.owner[v] == alpha) {
          for (std::size_t w : g.moves[v])
            if (arena[w]) {
              strategy[v] = w;
              break;
            }
        }
        win_e[v] = alpha == Player::kExists;
      }
      return win_e;
    }

    const Player beta = opponent(alpha);
    Mask battr = attractor(arena, sub_opp, beta);
    Mask rest2(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) rest2[v] = arena[v] && !battr[v];
    Mask sub2_e = solve(rest2);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!arena[v]) continue;
      win_e[v] = battr[v] ? beta == Player::kExists : sub2_e[v];
    }
    return win_e;
  }
};

// Tarjan SCCs of the subgraph induced by `keep`; returns the component id per node.
std::vector<std::size_t> sccs(const std::vector<std::vector<std::size_t>>& adj, const Mask& keep) {
  const std::size_t n = adj.size();
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, none), low(n, 0), comp(n, none);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, comps = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w : adj[v]) {
      if (!keep[w]) continue;
      if (index[w] == none) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = comps;
      } while (w != v);
      ++comps;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (keep[v] && index[v] == none) visit(v);
  return comp;
}

bool check_region(const ParityGame& g, const ParitySolution& sol, Player who) {
  const std::size_t n = g.size();
  Mask region(n, 0);
  for (std::size_t v = 0; v < n; ++v) region[v] = sol.winner[v] == who;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!region[v]) continue;
    if (g.owner[v] == who) {
      if (g.moves[v].empty()) return false;  // stuck yet claimed as won
      if (!sol.strategy[v]) return false;
      std::size_t w = *sol.strategy[v];
      if (std::find(g.moves[v].begin(), g.moves[v].end(), w) == g.moves[v].end() || !region[w]) return false;
      adj[v].push_back(w);
    } else {
      for (std::size_t w : g.moves[v]) {
        if (!region[w]) return false;
        adj[v].push_back(w);
      }
    }
  }
  // No cycle whose highest priority has the losing parity.
  const unsigned losing = who == Player::kExists ? 1 : 0;
  std::vector<unsigned> prios;
  for (std::size_t v = 0; v < n; ++v)
    if (region[v] && g.priority[v] % 2 == losing) prios.push_back(g.priority[v]);
  std::sort(prios.begin(), prios.end());
  prios.erase(std::unique(prios.begin(), prios.end()), prios.end());
  for (unsigned p : prios) {
    Mask keep(n, 0);
    for (std::size_t v = 0; v < n; ++v) keep[v] = region[v] && g.priority[v] <= p;
    auto comp = sccs(adj, keep);
    std::vector<std::size_t> comp_size(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (keep[v]) ++comp_size[comp[v]];
    for (std::size_t v = 0; v < n; ++v) {
      if (!keep[v] || g.priority[v] != p) continue;
      bool self_loop = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
      if (comp_size[comp[v]] > 1 || self_loop) return false;
    }
  }
  return true;
}

}  // namespace

ParitySolution solve_parity(const ParityGame& game) {
  // Dead ends: the stuck owner moves into a sink won by the opponent.
  ParityGame g = game;
  const std::size_t n = game.size();
  std::size_t sink_e = g.add(Player::kExists, 0);
  std::size_t sink_a = g.add(Player::kForall, 1);
  g.moves[sink_e].push_back(sink_e);
  g.moves[sink_a].push_back(sink_a);
  for (std::size_t v = 0; v < n; ++v)
    if (g.moves[v].empty()) g.moves[v].push_back(game.owner[v] == Player::kExists ? sink_a : sink_e);

  Solver solver(g);
  Mask all(g.size(), 1);
  Mask win_e = solver.solve(all);

  ParitySolution sol;
  sol.winner.resize(n);
  sol.strategy.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    sol.winner[v] = win_e[v] ? Player::kExists : Player::kForall;
    if (sol.winner[v] == game.owner[v] && !game.moves[v].empty()) sol.strategy[v] = solver.strategy[v];
  }
  return sol;
}

bool check_strategy(const ParityGame& game, const ParitySolution& sol) {
  if (sol.winner.size() != game.size() || sol.strategy.size() != game.size()) return false;
  // A stuck owner must lose.
  for (std::size_t v = 0; v < game.size(); ++v)
    if (game.moves[v].empty() && sol.winner[v] == game.owner[v]) return false;
  return check_region(game, sol, Player::kExists) && check_region(game, sol, Player::kForall);
}

}  // namespace polymu
