#include "polymu/xcheck.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "polymu/acceptance.hpp"
#include "polymu/apt.hpp"
#include "polymu/bisim.hpp"
#include "polymu/dbisim.hpp"
#include "polymu/eval.hpp"
#include "polymu/formula_io.hpp"
#include "polymu/generators.hpp"
#include "polymu/nonuniv.hpp"
#include "polymu/pumping.hpp"
#include "polymu/random.hpp"
#include "polymu/transforms.hpp"

namespace polymu {
namespace {

using Failure = std::optional<std::string>;

Rng case_rng(const RunConfig& config, int criterion, std::size_t i) {
  return Rng(config.seed + 1000000ull * static_cast<std::uint64_t>(criterion) + i);
}

std::size_t count_or(const RunConfig& config, std::size_t fallback) {
  return config.iterations ? config.iterations : fallback;
}

void record(CriterionResult& r, const Failure& f) {
  ++r.cases;
  if (f) {
    if (r.failures == 0) r.detail = "case " + std::to_string(r.cases - 1) + ": " + *f;
    ++r.failures;
  }
}

// Runs `body` for each sample; exceptions count as failures.
void sample(CriterionResult& r, const RunConfig& config, std::size_t count,
            const std::function<Failure(Rng&, std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = case_rng(config, r.number, i);
    Failure f;
    try {
      f = body(rng, i);
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    record(r, f);
  }
}

void note(CriterionResult& r, const std::string& text) {
  r.detail += (r.detail.empty() ? "" : "; ") + text;
}

std::string yn(bool b) { return b ? "true" : "false"; }

const Signature& two_letter_sig() {
  static const Signature s({"a", "b"}, {"f"});
  return s;
}

const Signature& one_letter_sig() {
  static const Signature s({"a"}, {"f"});
  return s;
}

const Signature& rich_sig() {
  static const Signature s({"a", "b"}, {"f", "g"});
  return s;
}

// ---- 1 and 12: shared corpus of (G, φ, d) ----

struct RootedCase {
  LabeledGraph g;
  Formula f;
  std::size_t d;
};

RootedCase rooted_case(Rng& rng, const RunConfig& config) {
  std::size_t d = rng.between(1, config.max_d);
  LabeledGraph g = random_graph(rng, two_letter_sig(), config.max_nodes);
  FormulaShape shape;
  shape.arity = d + 1;
  shape.d_rooted = true;
  shape.size = rng.between(1, config.max_formula_size);
  return {g, random_formula(rng, two_letter_sig(), shape), d};
}

CriterionResult c1(const RunConfig& config) {
  CriterionResult r{1, "monofication on powers"};
  std::size_t satisfied = 0;
  sample(r, config, count_or(config, 200), [&](Rng& rng, std::size_t) -> Failure {
    RootedCase c = rooted_case(rng, config);
    bool poly = models(c.g, c.f, c.d + 1);
    bool mono = models(power(c.g, c.d), monofy(c.f, c.d + 1), 1);
    if (poly) ++satisfied;
    if (poly != mono)
      return "d=" + std::to_string(c.d) + " " + print_formula(c.f) + ": G " + yn(poly) + ", power " + yn(mono);
    return std::nullopt;
  });
  note(r, std::to_string(satisfied) + " satisfied");
  return r;
}

CriterionResult c12(const RunConfig& config) {
  CriterionResult r{12, "bisimulation invariance"};
  const std::size_t count = count_or(config, 200);
  for (std::size_t i = 0; i < count; ++i) {
    // Same generator stream as criterion 1.
    Rng rng = case_rng(config, 1, i);
    Failure f;
    try {
      RootedCase c = rooted_case(rng, config);
      bool base = models(c.g, c.f, c.d + 1);
      bool quot = models(quotient(c.g), c.f, c.d + 1);
      Rng split_rng = case_rng(config, 12, i);
      bool split = models(split_nodes(split_rng, c.g, 2), c.f, c.d + 1);
      if (base != quot || base != split)
        f = print_formula(c.f) + ": G " + yn(base) + ", quotient " + yn(quot) + ", split " + yn(split);
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    record(r, f);
  }
  return r;
}

// ---- 2 ----

CriterionResult c2(const RunConfig& config) {
  CriterionResult r{2, "monofy/polyfy inverses"};
  sample(r, config, count_or(config, 200), [&](Rng& rng, std::size_t) -> Failure {
    std::size_t d = rng.between(1, config.max_d);
    FormulaShape rooted;
    rooted.arity = d + 1;
    rooted.d_rooted = true;
    rooted.size = rng.between(1, config.max_formula_size);
    Formula phi = random_formula(rng, two_letter_sig(), rooted);
    Formula back = polyfy(monofy(phi, d + 1), d);
    if (!(back == phi)) return "poly(mono(" + print_formula(phi) + ")) = " + print_formula(back);

    Signature lifted = lift_signature(two_letter_sig(), d);
    FormulaShape mono;
    mono.arity = 1;
    mono.reset_boxes = false;
    mono.size = rng.between(1, config.max_formula_size);
    Formula psi = random_formula(rng, lifted, mono);
    Formula again = monofy(polyfy(psi, d), d + 1);
    if (!(again == psi)) return "mono(poly(" + print_formula(psi, 1) + ")) = " + print_formula(again, 1);
    return std::nullopt;
  });
  return r;
}

// ---- 3 ----

LabeledGraph random_lifted(Rng& rng, std::size_t d, std::size_t max_nodes) {
  const Signature& base = one_letter_sig();
  switch (rng.below(3)) {
    case 0: return random_graph(rng, lift_signature(base, d), max_nodes, 1, 1);
    case 1: {
      std::size_t per = d == 1 ? max_nodes : 3;
      LabeledGraph p = power(random_graph(rng, base, per), d);
      return perturb(rng, p);
    }
    default: {
      std::size_t per = d == 1 ? max_nodes : 3;
      std::vector<LabeledGraph> parts;
      for (std::size_t k = 0; k < d; ++k) parts.push_back(random_graph(rng, base, per));
      LabeledGraph p = product(parts);
      return rng.chance(1, 2) ? perturb(rng, p) : p;
    }
  }
}

std::string show(const PowerConditions& p) {
  return "per=" + yn(p.persistent) + " rst=" + yn(p.reset) + " pow=" + yn(p.power_rooted);
}

CriterionResult c3(const RunConfig& config) {
  CriterionResult r{3, "power detection dbisim = logic"};
  std::size_t powers = 0, mixed = 0, random_products = 0, random_powers = 0;
  sample(r, config, count_or(config, 100), [&](Rng& rng, std::size_t) -> Failure {
    std::size_t d = rng.between(1, 2);
    LabeledGraph g = random_lifted(rng, d, 9);
    PowerConditions p = power_conditions(g, d, PowerMethod::kBoth);
    if (p.is_product()) ++random_products;
    if (p.is_power()) ++random_powers;
    return std::nullopt;
  });
  const std::size_t constructed = config.iterations ? std::max<std::size_t>(config.iterations / 2, 2) : 50;
  for (std::size_t i = 0; i < constructed; ++i) {
    Rng rng = case_rng(config, 3, 500000 + i);
    Failure f;
    try {
      if (i % 2 == 0) {
        std::size_t d = rng.between(1, 3);
        LabeledGraph g = power(random_graph(rng, two_letter_sig(), 3), d);
        if (rng.chance(1, 2)) g = split_nodes(rng, g, 2);
        PowerConditions p = power_conditions(g, d, PowerMethod::kBoth);
        ++powers;
        if (!p.is_power()) f = "power reported as " + show(p);
      } else {
        LabeledGraph x = random_graph(rng, two_letter_sig(), 3);
        LabeledGraph y = random_graph(rng, two_letter_sig(), 3);
        while (bisimilar(x, y)) y = random_graph(rng, two_letter_sig(), 3);
        std::vector<LabeledGraph> parts{x, y};
        PowerConditions p = power_conditions(product(parts), 2, PowerMethod::kBoth);
        ++mixed;
        if (!p.persistent || !p.reset || p.power_rooted) f = "mixed product reported as " + show(p);
      }
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    record(r, f);
  }
  note(r, "random: " + std::to_string(random_products) + " products, " +
              std::to_string(random_powers) + " powers; constructed: " + std::to_string(powers) + " powers, " +
              std::to_string(mixed) + " mixed products");
  return r;
}

// ---- 4 ----

CriterionResult c4(const RunConfig& config) {
  CriterionResult r{4, "factorization"};
  sample(r, config, count_or(config, 100), [&](Rng& rng, std::size_t) -> Failure {
    std::size_t d = rng.between(1, 3);
    LabeledGraph g = random_graph(rng, two_letter_sig(), 4);
    LabeledGraph p = power(g, d);
    for (std::size_t i = 0; i < d; ++i)
      if (!bisimilar(factor(p, i), g)) return "factor " + std::to_string(i) + " of a power not bisimilar to the base";
    return std::nullopt;
  });
  const std::size_t products = config.iterations ? std::max<std::size_t>(config.iterations / 2, 2) : 50;
  for (std::size_t i = 0; i < products; ++i) {
    Rng rng = case_rng(config, 4, 500000 + i);
    Failure f;
    try {
      std::size_t d = rng.between(1, 3);
      std::vector<LabeledGraph> parts;
      for (std::size_t k = 0; k < d; ++k) parts.push_back(random_graph(rng, two_letter_sig(), 3));
      LabeledGraph h = split_nodes(rng, product(parts), 2);
      auto fs = factors(h);
      if (!bisimilar(product(fs), h)) f = "product of factors not bisimilar (d=" + std::to_string(d) + ")";
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    record(r, f);
  }
  return r;
}

// ---- 5 ----

CriterionResult c5(const RunConfig& config) {
  CriterionResult r{5, "bisim formula = d-bisimulation"};
  sample(r, config, count_or(config, 50), [&](Rng& rng, std::size_t) -> Failure {
    std::size_t d = rng.between(1, 2);
    LabeledGraph g = random_lifted(rng, d, 9);
    DBisimFamily fam = largest_d_bisimulation(g);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Relation logic = evaluate(g, gen_bisim_formula(i, j, one_letter_sig(), d), 2).to_relation();
        if (!(logic == fam.at(i, j)))
          return "relation " + std::to_string(i) + std::to_string(j) + " differs on a " +
                 std::to_string(g.num_nodes()) + "-node graph";
      }
    return std::nullopt;
  });
  return r;
}

// ---- 6 ----

// Edge bits row-major (from * n + to), then accepting bits; node 0 is the root.
LabeledGraph nfa_from_bits(std::size_t n, std::uint64_t edges, std::uint64_t accepting) {
  std::vector<std::string> ids;
  std::vector<ColorSet> labels(n);
  std::vector<Edge> es;
  for (std::size_t v = 0; v < n; ++v) {
    ids.push_back(std::to_string(v));
    if (accepting >> v & 1) labels[v].push_back(0);
    for (std::size_t w = 0; w < n; ++w)
      if (edges >> (v * n + w) & 1) es.push_back({v, 0, w});
  }
  return LabeledGraph(one_letter_sig(), std::move(ids), std::move(labels), 0, std::move(es));
}

// True iff no relabelling of nodes 1..n-1 gives a smaller (edges, accepting) code.
bool is_canonical(std::size_t n, std::uint64_t edges, std::uint64_t accepting) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    std::uint64_t e = 0, a = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (accepting >> v & 1) a |= std::uint64_t{1} << perm[v];
      for (std::size_t w = 0; w < n; ++w)
        if (edges >> (v * n + w) & 1) e |= std::uint64_t{1} << (perm[v] * n + perm[w]);
    }
    if (e < edges || (e == edges && a < accepting)) return false;
  }
  return true;
}

CriterionResult c6(const RunConfig& config) {
  CriterionResult r{6, "one-letter lifting lemma"};
  std::size_t members = 0, non_members = 0;
  SearchOptions opts{config.step_budget};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << (n * n)); ++edges) {
      for (std::uint64_t acc = 0; acc < (std::uint64_t{1} << n); ++acc) {
        if (!is_canonical(n, edges, acc)) continue;
        LabeledGraph g = nfa_from_bits(n, edges, acc);
        NonUnivVerdict base = one_letter_non_universal(g, opts);
        for (std::size_t d = 1; d <= 2; ++d) {
          Failure f;
          try {
            LabeledGraph p = power(g, d);
            NonUnivVerdict lifted = one_lifted_non_universal(p, d, opts);
            if (lifted.member != base.member) {
              f = "NFA " + std::to_string(n) + "/" + std::to_string(edges) + "/" + std::to_string(acc) + " d=" +
                  std::to_string(d) + ": base " + yn(base.member) + ", lifted " + yn(lifted.member);
            } else if (base.member) {
              // The lifted witness must also witness the base query, and vice versa.
              std::vector<NodeId> level = reach_by_squaring(g, *lifted.length);
              bool ok = std::none_of(level.begin(), level.end(), [&](NodeId v) { return g.has_color(v, 0); });
              std::vector<std::string> word(*base.length, "a");
              if (!ok || !verify_lifted_witness(p, d, word)) f = "witness sets do not intersect";
            }
            (base.member ? members : non_members)++;
          } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
          }
          record(r, f);
        }
      }
    }
  }
  const double share_in = r.cases ? static_cast<double>(members) / static_cast<double>(r.cases) : 0;
  const double share_out = r.cases ? static_cast<double>(non_members) / static_cast<double>(r.cases) : 0;
  if (share_in < 0.1 || share_out < 0.1) {
    ++r.failures;
    r.detail = "membership too one-sided";
  }
  std::ostringstream extra;
  extra << members << " member / " << non_members << " non-member cases";
  note(r, extra.str());
  return r;
}

// ---- 7 ----

CriterionResult c7(const RunConfig& config) {
  CriterionResult r{7, "two-letter lifting lemma"};
  SearchOptions opts{config.step_budget};
  std::size_t members = 0;
  sample(r, config, count_or(config, 300), [&](Rng& rng, std::size_t) -> Failure {
    LabeledGraph g = random_graph(rng, two_letter_sig(), 3);
    NonUnivVerdict base = two_letter_non_universal(g, opts);
    if (base.member) ++members;
    if (base.member && !verify_witness(g, *base.word)) return std::string("base witness fails replay");
    for (std::size_t d = 1; d <= 2; ++d) {
      LabeledGraph p = power(g, d);
      NonUnivVerdict lifted = two_lifted_non_universal(p, d, opts);
      if (lifted.member != base.member)
        return "d=" + std::to_string(d) + ": base " + yn(base.member) + ", lifted " + yn(lifted.member);
      if (base.member) {
        if (!verify_lifted_witness(p, d, *base.word)) return std::string("base word fails the lifted path condition");
        if (!verify_witness(g, *lifted.word)) return std::string("lifted word fails the base condition");
      }
    }
    return std::nullopt;
  });
  note(r, std::to_string(members) + " members");
  return r;
}

// ---- 8 ----

CriterionResult c8(const RunConfig& config) {
  CriterionResult r{8, "iterated squaring = BFS levels"};
  sample(r, config, count_or(config, 100), [&](Rng& rng, std::size_t) -> Failure {
    LabeledGraph g = random_graph(rng, one_letter_sig(), 8, 1, 1);
    std::vector<char> level(g.num_nodes(), 0);
    level[g.root()] = 1;
    for (std::size_t n = 0; n <= 64; ++n) {
      std::vector<NodeId> expect;
      for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (level[v]) expect.push_back(v);
      if (reach_by_squaring(g, n) != expect) return "mismatch at n = " + std::to_string(n);
      std::vector<char> next(g.num_nodes(), 0);
      for (const Edge& e : g.edges())
        if (level[e.from]) next[e.to] = 1;
      level = std::move(next);
    }
    return std::nullopt;
  });
  return r;
}

// ---- 9 ----

CriterionResult c9(const RunConfig& config) {
  CriterionResult r{9, "automaton = evaluator"};
  std::size_t accepted = 0;
  sample(r, config, count_or(config, 500), [&](Rng& rng, std::size_t) -> Failure {
    LabeledGraph g = random_graph(rng, rich_sig(), config.max_nodes);
    FormulaShape shape;
    shape.size = rng.between(1, std::min<std::size_t>(config.max_formula_size, 10));
    Formula psi = random_formula(rng, rich_sig(), shape);
    Apt apt = formula_to_apt(psi, rich_sig());
    ParityGame game = build_acceptance_game(apt, g);
    ParitySolution sol = solve_parity(game);
    if (!check_strategy(game, sol)) return "invalid strategy for " + print_formula(psi, 1);
    bool by_apt = sol.winner[game.initial] == Player::kExists;
    bool by_eval = models(g, psi, 1);
    if (by_apt) ++accepted;
    if (by_apt != by_eval) return print_formula(psi, 1) + ": automaton " + yn(by_apt) + ", evaluator " + yn(by_eval);
    return std::nullopt;
  });
  note(r, std::to_string(accepted) + " accepted");
  return r;
}

// ---- 10 ----

CriterionResult c10(const RunConfig& config) {
  CriterionResult r{10, "pumping lemma"};
  const Signature& sig = two_letter_sig();
  const Formula reach = parse_formula("mu X. f | <a>X | <b>X", sig, 1);
  std::size_t max_states = 0, max_path = 0;
  sample(r, config, count_or(config, 50), [&](Rng& rng, std::size_t i) -> Failure {
    for (std::size_t attempt = 0; attempt < 2000; ++attempt) {
      Formula psi = reach;
      if (i % 3 != 0) {
        FormulaShape shape;
        shape.size = rng.between(2, 5);
        psi = random_formula(rng, sig, shape);
      }
      Apt apt = formula_to_apt(psi, sig);
      if (apt.num_states() > 6) continue;
      const std::size_t bound = (std::size_t{1} << apt.num_states()) + 1;
      FiniteTree t = random_spine_tree(rng, sig, bound + 1, 2);
      if (!accepts(apt, t.graph())) continue;
      std::vector<NodeId> path(bound + 1);
      for (NodeId v = 0; v <= bound; ++v) path[v] = v;
      auto [pi, pj] = find_pumping_pair(apt, t, path);
      max_states = std::max(max_states, apt.num_states());
      max_path = std::max(max_path, path.size());
      if (!(1 <= pi && pi < pj && pj <= bound)) return std::string("pair outside the bound");
      for (std::size_t k : {0, 2, 3})
        if (!accepts(apt, pump(t, path, pi, pj, k).graph()))
          return print_formula(psi, 1) + ": pumping k=" + std::to_string(k) + " loses acceptance";
      if (canonical_form(pump(t, path, pi, pj, 1)) != canonical_form(t)) return std::string("k=1 not isomorphic");
      return std::nullopt;
    }
    return std::string("no accepted tree found");
  });
  note(r, "up to " + std::to_string(max_states) + " states, paths up to " +
              std::to_string(max_path) + " nodes");
  return r;
}

// ---- 11 ----

CriterionResult c11(const RunConfig& config) {
  CriterionResult r{11, "relative regularity example"};
  const Signature& sig = two_letter_sig();
  const Formula luni = parse_formula("mu X. f | <a>X | <b>X", sig, 1);
  std::size_t in_l = 0;
  sample(r, config, count_or(config, 50), [&](Rng& rng, std::size_t) -> Failure {
    std::size_t depth = rng.between(0, 8);
    std::size_t branching = rng.between(1, 3);
    std::vector<WordLetter> word(depth + 1);
    for (auto& letter : word) {
      if (rng.chance(1, 4)) letter.colors.push_back("f");
      letter.action = rng.chance(1, 2) ? "a" : "b";
    }
    std::vector<FiniteTree> trees{gen_rword_tree(sig, word, branching, depth)};
    auto report = check_relative_membership(luni, is_rword, trees,
                                            [](const FiniteTree& t) { return check_luni(t).has_value(); });
    const RelativeVerdict& v = report.front();
    if (!v.in_r) return std::string("generated tree is not a same-word tree");
    if (*v.in_l) ++in_l;
    if (!v.consistent()) return "formula " + yn(v.models) + ", level check " + yn(*v.in_l);
    return std::nullopt;
  });
  note(r, std::to_string(in_l) + " in L");
  return r;
}

}  // namespace

CriterionResult run_criterion(int number, const RunConfig& config) {
  CriterionResult r;
  switch (number) {
    case 1: r = c1(config); break;
    case 2: r = c2(config); break;
    case 3: r = c3(config); break;
    case 4: r = c4(config); break;
    case 5: r = c5(config); break;
    case 6: r = c6(config); break;
    case 7: r = c7(config); break;
    case 8: r = c8(config); break;
    case 9: r = c9(config); break;
    case 10: r = c10(config); break;
    case 11: r = c11(config); break;
    case 12: r = c12(config); break;
    default: r = CriterionResult{number, "unknown criterion"}; r.failures = 1; break;
  }
  r.passed = r.failures == 0 && r.cases > 0;
  return r;
}

std::vector<CriterionResult> run_all(const RunConfig& config) {
  std::vector<CriterionResult> out;
  for (int c = 1; c <= kNumCriteria; ++c) out.push_back(run_criterion(c, config));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.number << " " << r.name << ": " << (r.cases - r.failures) << "/"
      << r.cases;
  if (!r.detail.empty()) out << " (" << r.detail << ")";
  return out.str();
}

}  // namespace polymu
