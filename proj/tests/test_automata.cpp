#include <catch2/catch_amalgamated.hpp>

#include "polymu/acceptance.hpp"
#include "polymu/apt.hpp"
#include "polymu/error.hpp"
#include "polymu/eval.hpp"
#include "polymu/fixtures.hpp"
#include "polymu/formula_io.hpp"
#include "polymu/parity.hpp"
#include "polymu/pumping.hpp"
#include "polymu/random.hpp"

using namespace polymu;

namespace {

using K = Transition::Kind;

// Can `opp` win from v once `who` is fixed to `choice` (nullopt = all moves)?
// The opponent wins by reaching a dead end of `who` or a cycle whose top priority has its parity.
bool opponent_wins(const ParityGame& g, Player who, const std::vector<std::optional<std::size_t>>& choice,
                   std::size_t v) {
  const unsigned opp_parity = who == Player::kExists ? 1 : 0;
  auto next = [&](std::size_t u) {
    if (g.owner[u] == who && choice[u]) return std::vector<std::size_t>{*choice[u]};
    return g.moves[u];
  };
  auto reach = [&](std::size_t from, unsigned cap) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t w : next(from))
      if (g.priority[w] <= cap && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : next(u))
        if (g.priority[w] <= cap && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return seen;
  };
  auto from_v = reach(v, ~0u);
  from_v[v] = true;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (!from_v[u]) continue;
    if (g.moves[u].empty() && g.owner[u] == who) return true;
    if (g.priority[u] % 2 == opp_parity && reach(u, g.priority[u])[u]) return true;
  }
  return false;
}

// Exists wins from v iff some positional Exists strategy leaves Forall no win.
std::vector<Player> brute_force_winners(const ParityGame& g) {
  std::vector<std::size_t> choosers;
  for (std::size_t u = 0; u < g.size(); ++u)
    if (g.owner[u] == Player::kExists && g.moves[u].size() > 1) choosers.push_back(u);
  std::vector<Player> out(g.size(), Player::kForall);
  std::vector<std::size_t> pick(choosers.size(), 0);
  for (;;) {
    std::vector<std::optional<std::size_t>> choice(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
      if (g.owner[u] == Player::kExists && !g.moves[u].empty()) choice[u] = g.moves[u][0];
    for (std::size_t k = 0; k < choosers.size(); ++k) choice[choosers[k]] = g.moves[choosers[k]][pick[k]];
    for (std::size_t v = 0; v < g.size(); ++v)
      if (out[v] == Player::kForall && !opponent_wins(g, Player::kExists, choice, v)) out[v] = Player::kExists;
    std::size_t k = 0;
    while (k < choosers.size() && ++pick[k] == g.moves[choosers[k]].size()) pick[k++] = 0;
    if (k == choosers.size()) break;
  }
  return out;
}

ParityGame random_game(Rng& rng, std::size_t max_size) {
  ParityGame g;
  std::size_t n = rng.between(1, max_size);
  for (std::size_t v = 0; v < n; ++v) {
    Player p = rng.chance(1, 2) ? Player::kExists : Player::kForall;
    g.add(p, rng.below(5));
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t deg = rng.below(4);
    for (std::size_t k = 0; k < deg; ++k) {
      std::size_t w = rng.below(n);
      if (std::find(g.moves[v].begin(), g.moves[v].end(), w) == g.moves[v].end()) g.moves[v].push_back(w);
    }
  }
  return g;
}

Apt single_state(K kind, std::size_t symbol, unsigned prio, const Signature& sig) {
  Apt apt;
  apt.signature = sig;
  apt.delta = {{kind, symbol, 0, 0}};
  apt.priority = {prio};
  apt.label = {"q"};
  return apt;
}

FiniteTree chain(const Signature& sig, std::size_t n, const std::vector<std::size_t>& f_at) {
  GraphBuilder b(sig);
  for (std::size_t k = 0; k < n; ++k) {
    bool f = std::find(f_at.begin(), f_at.end(), k) != f_at.end();
    b.node("v" + std::to_string(k), f ? std::vector<std::string>{"f"} : std::vector<std::string>{});
  }
  for (std::size_t k = 0; k + 1 < n; ++k) b.edge("v" + std::to_string(k), "a", "v" + std::to_string(k + 1));
  return FiniteTree(b.root("v0").build());
}

std::vector<NodeId> spine(std::size_t n) {
  std::vector<NodeId> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = k;
  return p;
}

}  // namespace

TEST_CASE("parity solver on small games", "[automata]") {
  ParityGame even;
  even.add(Player::kExists, 2);
  even.moves[0] = {0};
  CHECK(solve_parity(even).winner[0] == Player::kExists);

  ParityGame odd;
  odd.add(Player::kExists, 1);
  odd.moves[0] = {0};
  CHECK(solve_parity(odd).winner[0] == Player::kForall);

  ParityGame stuck;
  stuck.add(Player::kExists, 0);
  stuck.add(Player::kForall, 0);
  CHECK(solve_parity(stuck).winner == std::vector<Player>{Player::kForall, Player::kExists});

  // Exists escapes the odd loop into an even one.
  ParityGame escape;
  escape.add(Player::kExists, 1);
  escape.add(Player::kForall, 4);
  escape.moves[0] = {0, 1};
  escape.moves[1] = {1};
  auto sol = solve_parity(escape);
  CHECK(sol.winner[0] == Player::kExists);
  CHECK(sol.strategy[0] == std::optional<std::size_t>{1});
  CHECK(check_strategy(escape, sol));
}

TEST_CASE("parity solver against exhaustive strategies", "[automata]") {
  Rng rng(51);
  std::size_t exists_wins = 0, total = 0;
  for (int k = 0; k < 400; ++k) {
    auto g = random_game(rng, k < 300 ? 8 : 12);
    auto sol = solve_parity(g);
    CHECK(sol.winner == brute_force_winners(g));
    CHECK(check_strategy(g, sol));
    // The returned strategies are winning, checked independently.
    for (std::size_t v = 0; v < g.size(); ++v) {
      Player w = sol.winner[v];
      CHECK_FALSE(opponent_wins(g, w, sol.strategy, v));
      exists_wins += w == Player::kExists;
      ++total;
    }
  }
  CHECK(exists_wins > 0);
  CHECK(exists_wins < total);
}

TEST_CASE("strategy checker rejects bad strategies", "[automata]") {
  ParityGame g;
  g.add(Player::kExists, 1);
  g.add(Player::kForall, 2);
  g.moves[0] = {0, 1};
  g.moves[1] = {1};
  auto sol = solve_parity(g);
  REQUIRE(check_strategy(g, sol));
  auto bad = sol;
  bad.strategy[0] = 0;
  CHECK_FALSE(check_strategy(g, bad));
  auto wrong = sol;
  wrong.winner[0] = Player::kForall;
  CHECK_FALSE(check_strategy(g, wrong));
}

TEST_CASE("acceptance game basics", "[automata]") {
  Signature sig({"a"}, {"f"});
  auto colored = GraphBuilder(sig).node("r", {"f"}).root("r").build();
  auto plain = GraphBuilder(sig).node("r").root("r").build();
  CHECK(accepts(single_state(K::kColor, 0, 0, sig), colored));
  CHECK_FALSE(accepts(single_state(K::kColor, 0, 0, sig), plain));
  CHECK(accepts(single_state(K::kNotColor, 0, 0, sig), plain));
  CHECK_FALSE(accepts(single_state(K::kDiamond, 0, 0, sig), plain));
  CHECK(accepts(single_state(K::kBox, 0, 1, sig), plain));

  auto loop = GraphBuilder(sig).node("r").edge("r", "a", "r").root("r").build();
  CHECK(accepts(single_state(K::kDiamond, 0, 0, sig), loop));
  CHECK_FALSE(accepts(single_state(K::kDiamond, 0, 1, sig), loop));

  auto game = build_acceptance_game(single_state(K::kDiamond, 0, 3, sig), loop);
  CHECK(game.size() == 1);
  CHECK(game.priority[0] == 3);
  CHECK(game.owner[0] == Player::kExists);
  CHECK_THROWS_AS(build_acceptance_game(single_state(K::kColor, 0, 0, sig), example_power()), InputError);
}

TEST_CASE("formula to automaton", "[automata]") {
  Signature sig({"a", "b"}, {"f"});
  auto tt_apt = formula_to_apt(tt(), sig);
  Rng rng(52);
  for (int k = 0; k < 20; ++k) CHECK(accepts(tt_apt, random_graph(rng, sig, 4)));
  CHECK_FALSE(accepts(formula_to_apt(ff(), sig), random_graph(rng, sig, 4)));

  auto uni = parse_formula("mu X. f | <a>X | <b>X", sig, 1);
  auto apt = formula_to_apt(uni, sig);
  auto reach = GraphBuilder(sig).node("0").node("1").node("2", {"f"}).edge("0", "b", "1").edge("1", "a", "2").root("0").build();
  auto cyc = GraphBuilder(sig).node("0").node("1").edge("0", "a", "1").edge("1", "b", "0").root("0").build();
  CHECK(accepts(apt, reach));
  CHECK_FALSE(accepts(apt, cyc));
  auto e1 = GraphBuilder(sig).node("0").node("1", {"f"}).node("2").edge("0", "a", "1").edge("1", "a", "2").edge("2", "a", "1").root("0").build();
  CHECK(accepts(apt, e1));

  CHECK_THROWS_AS(formula_to_apt(var("X"), sig), InputError);
  CHECK_THROWS_AS(formula_to_apt(color("f", 1), sig), InputError);
  CHECK_FALSE(format_apt(apt).empty());
}

TEST_CASE("automaton priorities", "[automata]") {
  Signature sig({"a"}, {"f"});
  auto apt = formula_to_apt(parse_formula("nu Y. mu X. (f & <a>Y) | <a>X", sig, 1), sig);
  std::optional<unsigned> mu_p, nu_p;
  for (StateId q = 0; q < apt.num_states(); ++q) {
    if (apt.label[q] == "mu X") mu_p = apt.priority[q];
    if (apt.label[q] == "nu Y") nu_p = apt.priority[q];
  }
  REQUIRE(mu_p);
  REQUIRE(nu_p);
  CHECK(*mu_p % 2 == 1);
  CHECK(*nu_p % 2 == 0);
  CHECK(*nu_p > *mu_p);
  // Infinitely often f: true on an f-loop, false on a plain loop.
  CHECK(accepts(apt, GraphBuilder(sig).node("r", {"f"}).edge("r", "a", "r").root("r").build()));
  CHECK_FALSE(accepts(apt, GraphBuilder(sig).node("r").edge("r", "a", "r").root("r").build()));
}

TEST_CASE("automaton acceptance matches the evaluator", "[automata]") {
  Rng rng(53);
  Signature sig({"a", "b"}, {"f", "g"});
  std::size_t accepted = 0;
  for (int k = 0; k < 500; ++k) {
    auto g = random_graph(rng, sig, 5);
    auto f = random_formula(rng, sig, {.arity = 1, .size = rng.between(1, 10)});
    bool acc = accepts(formula_to_apt(f, sig), g);
    CHECK(acc == models(g, f, 1));
    accepted += acc;
  }
  CHECK(accepted > 50);
  CHECK(accepted < 450);
}

TEST_CASE("winning state sets and pumping pairs", "[automata]") {
  Signature sig({"a"}, {"f"});
  SECTION("a constant chain repeats immediately") {
    auto t = chain(sig, 6, {0, 1, 2, 3, 4, 5});
    auto apt = formula_to_apt(parse_formula("nu X. f & [a]X", sig, 1), sig);
    auto path = spine(6);
    auto sets = winning_state_sets(apt, t, path);
    REQUIRE(sets.size() == 6);
    CHECK(sets[0].count(apt.initial));
    for (const auto& s : sets) CHECK(s == sets[0]);
    CHECK(find_pumping_pair(apt, t, path) == std::pair<std::size_t, std::size_t>{1, 2});
  }
  SECTION("reachability on a chain with f at the end") {
    auto t = chain(sig, 12, {11});
    auto apt = formula_to_apt(parse_formula("mu X. f | <a>X", sig, 1), sig);
    auto path = spine(12);
    auto sets = winning_state_sets(apt, t, path);
    std::set<std::set<StateId>> distinct(sets.begin(), sets.end());
    CHECK(distinct.size() <= (std::size_t{1} << apt.num_states()));
    auto [i, j] = find_pumping_pair(apt, t, path);
    CHECK(0 < i);
    CHECK(i < j);
    CHECK(j <= (std::size_t{1} << apt.num_states()) + 1);
    CHECK(sets[i] == sets[j]);
    for (std::size_t k : {0, 2, 3}) CHECK(accepts(apt, pump(t, path, i, j, k).graph()));
  }
  SECTION("errors") {
    auto t = chain(sig, 3, {2});
    auto apt = formula_to_apt(parse_formula("mu X. f | <a>X", sig, 1), sig);
    std::vector<NodeId> bad{1, 2};
    CHECK_THROWS_AS(winning_state_sets(apt, t, bad), InputError);
    std::vector<NodeId> root_only{0};
    CHECK_THROWS_WITH(find_pumping_pair(apt, t, root_only), Catch::Matchers::ContainsSubstring("too short"));
    auto rejecting = formula_to_apt(parse_formula("~f", sig, 1), sig);
    auto path = spine(3);
    CHECK_THROWS_WITH(find_pumping_pair(formula_to_apt(ff(), sig), t, path), Catch::Matchers::ContainsSubstring("rejected"));
    CHECK_NOTHROW(winning_state_sets(rejecting, t, path));
  }
}
