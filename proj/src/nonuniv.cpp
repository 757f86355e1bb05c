#include "polymu/nonuniv.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "polymu/error.hpp"
#include "polymu/signature.hpp"

namespace polymu {
namespace {

using Subset = std::vector<bool>;

void require_shape(const Signature& sig, std::size_t actions, const char* what) {
  if (sig.num_actions() != actions || sig.num_colors() != 1)
    throw InputError(std::string("expected ") + what + " signature with " + std::to_string(actions) +
                         " action(s) and one color",
                     "signature");
}

// Letters in name order.
std::vector<ActionId> sorted_letters(const Signature& sig) {
  std::vector<ActionId> out(sig.num_actions());
  for (ActionId a = 0; a < out.size(); ++a) out[a] = a;
  std::sort(out.begin(), out.end(), [&](ActionId x, ActionId y) { return sig.actions()[x] < sig.actions()[y]; });
  return out;
}

Subset image(const LabeledGraph& g, const Subset& s, ActionId a) {
  Subset out(g.num_nodes(), false);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (s[v])
      for (NodeId w : g.successors(v, a)) out[w] = true;
  return out;
}

bool avoids(const LabeledGraph& g, const Subset& s, ColorId c) {
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (s[v] && g.has_color(v, c)) return false;
  return true;
}

// One component of a lifted graph seen as an NFA over the counted letters.
struct Component {
  const LabeledGraph* g = nullptr;
  std::vector<ActionId> letters;  // lifted ids a@i in base-letter order
  std::vector<char> is_eps;       // per action
  ColorId color = 0;
  Subset start;

  Subset closure(Subset s) const {
    std::vector<NodeId> stack;
    for (NodeId v = 0; v < s.size(); ++v)
      if (s[v]) stack.push_back(v);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (ActionId a = 0; a < is_eps.size(); ++a) {
        if (!is_eps[a]) continue;
        for (NodeId w : g->successors(v, a))
          if (!s[w]) {
            s[w] = true;
            stack.push_back(w);
          }
      }
    }
    return s;
  }

  Subset step(const Subset& s, std::size_t letter) const { return closure(image(*g, s, letters[letter])); }
};

std::vector<Component> components(const LabeledGraph& g, std::size_t d, std::size_t letters,
                                  std::vector<ActionId>& base_order) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  if (ls.d != d)
    throw InputError("graph signature is lifted for d = " + std::to_string(ls.d) + ", not " + std::to_string(d), "d");
  require_shape(ls.base, letters, "a lifted");
  base_order = sorted_letters(ls.base);

  // Nodes reachable from the root by any edges.
  Subset reach(g.num_nodes(), false);
  reach[g.root()] = true;
  std::vector<NodeId> stack{g.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (ActionId a = 0; a < g.signature().num_actions(); ++a)
      for (NodeId w : g.successors(v, a))
        if (!reach[w]) {
          reach[w] = true;
          stack.push_back(w);
        }
  }

  std::vector<Component> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    Component& c = out[i];
    c.g = &g;
    for (ActionId b : base_order) c.letters.push_back(ls.action[b][i]);
    c.is_eps.assign(g.signature().num_actions(), 1);
    for (ActionId a : c.letters) c.is_eps[a] = 0;
    c.is_eps[ls.reset[i]] = 0;
    c.color = ls.color[0][i];
    Subset start(g.num_nodes(), false);
    start[g.root()] = true;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      if (reach[v])
        for (NodeId t : g.successors(v, ls.reset[i])) start[t] = true;
    c.start = c.closure(start);
  }
  return out;
}

Subset concat(const std::vector<Subset>& parts) {
  Subset out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool all_avoid(const std::vector<Component>& comps, const std::vector<Subset>& sets) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!avoids(*comps[i].g, sets[i], comps[i].color)) return false;
  return true;
}

// Shared breadth-first search over tuples of subsets. `step(tuple, letter)`
// gives the successor tuple, `good(tuple)` the goal test.
template <typename Step, typename Good>
NonUnivVerdict subset_bfs(std::vector<Subset> start, std::size_t letters, const std::vector<std::string>& names,
                          const SearchOptions& options, Step step, Good good) {
  struct Entry {
    std::vector<Subset> sets;
    std::size_t parent;
    std::size_t letter;
  };
  NonUnivVerdict v;
  std::vector<Entry> nodes{{std::move(start), 0, 0}};
  std::unordered_map<Subset, std::size_t> seen{{concat(nodes[0].sets), 0}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (good(nodes[head].sets)) {
      std::vector<std::string> word;
      for (std::size_t k = head; k != 0; k = nodes[k].parent) word.push_back(names[nodes[k].letter]);
      std::reverse(word.begin(), word.end());
      v.member = true;
      v.length = word.size();
      v.word = std::move(word);
      return v;
    }
    for (std::size_t l = 0; l < letters; ++l) {
      std::vector<Subset> next = step(nodes[head].sets, l);
      if (seen.emplace(concat(next), nodes.size()).second) {
        if (nodes.size() >= options.max_steps) {
          v.exhausted_bound = true;
          return v;
        }
        nodes.push_back({std::move(next), head, l});
      }
    }
  }
  return v;
}

}  // namespace

std::string verdict_json(const NonUnivVerdict& v) {
  nlohmann::ordered_json j;
  j["member"] = v.member;
  if (v.word) j["witness"] = *v.word;
  else if (v.length) j["witness"] = *v.length;
  else j["witness"] = nullptr;
  j["exhausted_bound"] = v.exhausted_bound;
  return j.dump();
}

NonUnivVerdict one_letter_non_universal(const LabeledGraph& nfa, const SearchOptions& options) {
  require_shape(nfa.signature(), 1, "a one-letter");
  NonUnivVerdict v;
  Subset level(nfa.num_nodes(), false);
  level[nfa.root()] = true;
  std::map<Subset, std::size_t> seen;
  for (std::size_t n = 0;; ++n) {
    if (avoids(nfa, level, 0)) {
      v.member = true;
      v.length = n;
      return v;
    }
    if (!seen.emplace(level, n).second) return v;
    if (n >= options.max_steps) {
      v.exhausted_bound = true;
      return v;
    }
    level = image(nfa, level, 0);
  }
}

std::vector<NodeId> reach_by_squaring(const LabeledGraph& nfa, std::size_t n) {
  const std::size_t size = nfa.num_nodes();
  using Matrix = std::vector<std::vector<char>>;
  auto multiply = [size](const Matrix& x, const Matrix& y) {
    Matrix z(size, std::vector<char>(size, 0));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t k = 0; k < size; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < size; ++j)
            if (y[k][j]) z[i][j] = 1;
    return z;
  };
  Matrix result(size, std::vector<char>(size, 0));
  for (std::size_t i = 0; i < size; ++i) result[i][i] = 1;
  Matrix power(size, std::vector<char>(size, 0));
  for (const Edge& e : nfa.edges()) power[e.from][e.to] = 1;
  for (std::size_t m = n; m > 0; m >>= 1) {
    if (m & 1) result = multiply(result, power);
    if (m > 1) power = multiply(power, power);
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < size; ++v)
    if (result[nfa.root()][v]) out.push_back(v);
  return out;
}

NonUnivVerdict two_letter_non_universal(const LabeledGraph& nfa, const SearchOptions& options) {
  require_shape(nfa.signature(), 2, "a two-letter");
  const auto order = sorted_letters(nfa.signature());
  std::vector<std::string> names;
  for (ActionId a : order) names.push_back(nfa.signature().actions()[a]);
  Subset start(nfa.num_nodes(), false);
  start[nfa.root()] = true;
  return subset_bfs(
      {start}, order.size(), names, options,
      [&](const std::vector<Subset>& s, std::size_t l) { return std::vector<Subset>{image(nfa, s[0], order[l])}; },
      [&](const std::vector<Subset>& s) { return avoids(nfa, s[0], 0); });
}

NonUnivVerdict one_lifted_non_universal(const LabeledGraph& g, std::size_t d, const SearchOptions& options) {
  std::vector<ActionId> order;
  auto comps = components(g, d, 1, order);
  std::vector<Subset> sets;
  for (const auto& c : comps) sets.push_back(c.start);
  NonUnivVerdict v;
  std::map<Subset, std::size_t> seen;
  for (std::size_t n = 0;; ++n) {
    if (all_avoid(comps, sets)) {
      v.member = true;
      v.length = n;
      return v;
    }
    if (!seen.emplace(concat(sets), n).second) return v;
    if (n >= options.max_steps) {
      v.exhausted_bound = true;
      return v;
    }
    for (std::size_t i = 0; i < d; ++i) sets[i] = comps[i].step(sets[i], 0);
  }
}

NonUnivVerdict two_lifted_non_universal(const LabeledGraph& g, std::size_t d, const SearchOptions& options) {
  std::vector<ActionId> order;
  auto comps = components(g, d, 2, order);
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  std::vector<std::string> names;
  for (ActionId a : order) names.push_back(ls.base.actions()[a]);
  std::vector<Subset> start;
  for (const auto& c : comps) start.push_back(c.start);
  return subset_bfs(
      std::move(start), order.size(), names, options,
      [&](const std::vector<Subset>& s, std::size_t l) {
        std::vector<Subset> out(d);
        for (std::size_t i = 0; i < d; ++i) out[i] = comps[i].step(s[i], l);
        return out;
      },
      [&](const std::vector<Subset>& s) { return all_avoid(comps, s); });
}

bool verify_witness(const LabeledGraph& nfa, const std::vector<std::string>& word) {
  if (nfa.signature().num_colors() != 1) throw InputError("expected one color", "signature");
  Subset s(nfa.num_nodes(), false);
  s[nfa.root()] = true;
  for (const auto& letter : word) {
    auto a = nfa.signature().find_action(letter);
    if (!a) throw InputError("unknown letter '" + letter + "'", "witness");
    s = image(nfa, s, *a);
  }
  return avoids(nfa, s, 0);
}

bool verify_lifted_witness(const LabeledGraph& g, std::size_t d, const std::vector<std::string>& word) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  if (ls.d != d) throw InputError("lifted dimension mismatch", "d");
  if (ls.base.num_colors() != 1) throw InputError("expected one base color", "signature");
  std::vector<ActionId> letters;
  for (const auto& w : word) {
    auto a = ls.base.find_action(w);
    if (!a) throw InputError("unknown letter '" + w + "'", "witness");
    letters.push_back(*a);
  }
  const std::size_t n = g.num_nodes(), m = word.size();
  for (std::size_t i = 0; i < d; ++i) {
    // State (v, k): at v, the a@i moves since the last rst@i spell word[0..k).
    // Paths whose letters already diverged from the word are dropped: a later
    // rst@i brings them back through the reset edge from the same node.
    std::vector<char> seen(n * (m + 1), 0);
    std::vector<char> reached(n, 0);
    std::vector<std::pair<NodeId, std::size_t>> stack{{g.root(), 0}};
    seen[g.root() * (m + 1)] = 1;
    // Nodes reachable at all, to resume from after a mismatch.
    std::vector<char> any(n, 0);
    std::vector<NodeId> any_stack{g.root()};
    any[g.root()] = 1;
    while (!any_stack.empty()) {
      NodeId v = any_stack.back();
      any_stack.pop_back();
      for (ActionId a = 0; a < g.signature().num_actions(); ++a)
        for (NodeId w : g.successors(v, a))
          if (!any[w]) {
            any[w] = 1;
            any_stack.push_back(w);
          }
    }
    auto push = [&](NodeId v, std::size_t k) {
      if (!seen[v * (m + 1) + k]) {
        seen[v * (m + 1) + k] = 1;
        stack.push_back({v, k});
      }
    };
    for (NodeId v = 0; v < n; ++v)
      if (any[v])
        for (NodeId t : g.successors(v, ls.reset[i])) push(t, 0);
    while (!stack.empty()) {
      auto [v, k] = stack.back();
      stack.pop_back();
      if (k == m) reached[v] = 1;
      for (ActionId a = 0; a < g.signature().num_actions(); ++a) {
        if (a == ls.reset[i]) continue;
        bool counted = false;
        for (std::size_t b = 0; b < ls.base.num_actions(); ++b)
          if (ls.action[b][i] == a) {
            counted = true;
            if (k < m && letters[k] == b)
              for (NodeId w : g.successors(v, a)) push(w, k + 1);
          }
        if (!counted)
          for (NodeId w : g.successors(v, a)) push(w, k);
      }
    }
    for (NodeId v = 0; v < n; ++v)
      if (reached[v] && g.has_color(v, ls.color[0][i])) return false;
  }
  return true;
}

}  // namespace polymu
