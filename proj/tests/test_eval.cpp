#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "polymu/error.hpp"
#include "polymu/eval.hpp"
#include "polymu/fixtures.hpp"
#include "polymu/formula_io.hpp"
#include "polymu/random.hpp"
#include "polymu/transforms.hpp"

using namespace polymu;

namespace {

const Signature kSig({"a", "b"}, {"f", "g"});

// Reference semantics straight from the definition: tuples are enumerated with
// component 0 most significant, fixpoints via Knaster-Tarski over every subset.
class Oracle {
 public:
  using Set = std::vector<bool>;

  Oracle(const LabeledGraph& g, std::size_t d) : g_(g), d_(d) {
    std::vector<NodeId> t(d, 0);
    enumerate(t, 0);
    REQUIRE(tuples_.size() <= 8);
  }

  std::vector<std::vector<NodeId>> tuples() const { return tuples_; }

  Set eval(const Formula& f) {
    std::map<std::string, Set> env;
    return eval(f, env);
  }

 private:
  void enumerate(std::vector<NodeId>& t, std::size_t k) {
    if (k == d_) {
      index_[t] = tuples_.size();
      tuples_.push_back(t);
      return;
    }
    for (NodeId v = 0; v < g_.num_nodes(); ++v) {
      t[k] = v;
      enumerate(t, k + 1);
    }
  }

  Set eval(const Formula& f, std::map<std::string, Set>& env) {
    const std::size_t m = tuples_.size();
    Set out(m, false);
    switch (f.op()) {
      case Op::kTrue: out.assign(m, true); break;
      case Op::kFalse: break;
      case Op::kColor: {
        auto c = *g_.signature().find_color(f.name());
        for (std::size_t k = 0; k < m; ++k) out[k] = g_.has_color(tuples_[k][f.index()], c);
        break;
      }
      case Op::kVar: out = env.at(f.name()); break;
      case Op::kNot: {
        auto s = eval(f.child(), env);
        for (std::size_t k = 0; k < m; ++k) out[k] = !s[k];
        break;
      }
      case Op::kAnd:
      case Op::kOr: {
        auto l = eval(f.left(), env), r = eval(f.right(), env);
        for (std::size_t k = 0; k < m; ++k) out[k] = f.op() == Op::kAnd ? l[k] && r[k] : l[k] || r[k];
        break;
      }
      case Op::kDiamond:
      case Op::kBox: {
        auto s = eval(f.child(), env);
        auto a = *g_.signature().find_action(f.name());
        for (std::size_t k = 0; k < m; ++k) {
          bool any = false, all = true;
          for (NodeId w : g_.successors(tuples_[k][f.index()], a)) {
            auto t = tuples_[k];
            t[f.index()] = w;
            any = any || s[index_.at(t)];
            all = all && s[index_.at(t)];
          }
          out[k] = f.op() == Op::kDiamond ? any : all;
        }
        break;
      }
      case Op::kReplace: {
        auto s = eval(f.child(), env);
        for (std::size_t k = 0; k < m; ++k) {
          std::vector<NodeId> t(d_);
          for (std::size_t i = 0; i < d_; ++i) t[i] = tuples_[k][f.map()[i]];
          out[k] = s[index_.at(t)];
        }
        break;
      }
      case Op::kMu:
      case Op::kNu: {
        // μ: intersection of all S with body(S) ⊆ S; ν: union of all S with S ⊆ body(S).
        bool least = f.op() == Op::kMu;
        out.assign(m, least);
        auto saved = env.find(f.name()) == env.end() ? std::nullopt : std::optional(env[f.name()]);
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
          Set s(m);
          for (std::size_t k = 0; k < m; ++k) s[k] = mask >> k & 1;
          env[f.name()] = s;
          auto b = eval(f.child(), env);
          bool ok = true;
          for (std::size_t k = 0; k < m && ok; ++k) ok = least ? (!b[k] || s[k]) : (!s[k] || b[k]);
          if (!ok) continue;
          for (std::size_t k = 0; k < m; ++k) out[k] = least ? out[k] && s[k] : out[k] || s[k];
        }
        if (saved) env[f.name()] = *saved;
        else env.erase(f.name());
        break;
      }
    }
    return out;
  }

  const LabeledGraph& g_;
  std::size_t d_;
  std::vector<std::vector<NodeId>> tuples_;
  std::map<std::vector<NodeId>, std::size_t> index_;
};

std::size_t fixpoint_depth(const Formula& f) {
  switch (f.op()) {
    case Op::kTrue:
    case Op::kFalse:
    case Op::kColor:
    case Op::kVar: return 0;
    case Op::kAnd:
    case Op::kOr: return std::max(fixpoint_depth(f.left()), fixpoint_depth(f.right()));
    default: return fixpoint_depth(f.child()) + (is_fixpoint(f.op()) ? 1 : 0);
  }
}

void check_against_oracle(const LabeledGraph& g, const Formula& f, std::size_t d) {
  Oracle oracle(g, d);
  auto expected = oracle.eval(f);
  auto got = evaluate(g, f, d);
  auto tuples = oracle.tuples();
  std::size_t count = 0;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    CHECK(got.contains(tuples[k]) == expected[k]);
    count += expected[k];
  }
  CHECK(got.size() == count);
}

}  // namespace

TEST_CASE("tuple sets", "[eval]") {
  TupleSet s(3, 2);
  CHECK(s.universe() == 9);
  std::vector<NodeId> t{1, 2};
  CHECK(s.index_of(t) == 7);
  CHECK(s.tuple_at(7) == t);
  s.insert(t);
  CHECK(s.contains(t));
  CHECK(s.size() == 1);
  CHECK(s.complement().size() == 8);
  CHECK(s.complement().complement() == s);
  TupleSet full(3, 2, true);
  CHECK(full.size() == 9);
  auto both = full;
  both &= s;
  CHECK(both == s);
  auto r = s.to_relation();
  CHECK(r.contains(1, 2));
  CHECK(r.size() == 1);
  TupleSet big(100, 1, true);
  CHECK(big.size() == 100);
  CHECK(big.complement().empty());
}

TEST_CASE("evaluation basics", "[eval]") {
  auto g = example_graph();
  Signature sig = g.signature();
  CHECK(models(g, tt(), 1));
  CHECK_FALSE(models(g, ff(), 1));
  CHECK(evaluate(g, tt(), 2).size() == 9);
  CHECK(evaluate(g, ff(), 3).empty());

  auto reach_f = parse_formula("mu X. f | <a>X", sig, 1);
  CHECK(evaluate(g, reach_f, 1).size() == 3);
  auto always_f = parse_formula("nu X. f & [a]X", sig, 1);
  CHECK(evaluate(g, always_f, 1).empty());

  auto swapped = evaluate(g, parse_formula("%{1,0}(f@0 & ~f@1)", sig, 2), 2);
  for (NodeId u = 0; u < 3; ++u)
    for (NodeId v = 0; v < 3; ++v) CHECK(swapped.contains(std::vector<NodeId>{u, v}) == (v == 1 && u != 1));

  auto dup = evaluate(g, parse_formula("%{0,0}(f@0 & <a@1>f@1)", sig, 2), 2);
  CHECK(dup.size() == 0);
  auto dup2 = evaluate(g, parse_formula("%{1,1}(<a@0>f@0 & ~f@1)", sig, 2), 2);
  CHECK(dup2.size() == 6);
}

TEST_CASE("two tokens on the example graph", "[eval]") {
  auto g = example_graph();
  auto f = parse_formula("<a@0>(f@0 & <a@1>[a@1]f@1)", g.signature(), 2);
  // Token 0 reaches node 1, token 1 can only step to node 1 whose sole successor lacks f.
  CHECK_FALSE(models(g, f, 2));
  CHECK_FALSE(models(example_power(), monofy(parse_formula("<a@0>(f@0 & <a@1>[a@1]f@1)", g.signature(), 3), 3), 1));

  auto fixed = parse_formula("<a@0>(f@0 & <a@1><a@1>[a@1]f@1)", g.signature(), 2);
  CHECK(models(g, fixed, 2));
  CHECK(models(example_power(), monofy(parse_formula("<a@0>(f@0 & <a@1><a@1>[a@1]f@1)", g.signature(), 3), 3), 1));

  // It holds only with token 1 on node 1, whose successor 2 has an f-successor.
  auto where = evaluate(g, f, 2);
  CHECK_FALSE(where.empty());
  for (auto t : where.tuples()) CHECK(t[1] == 1);
}

TEST_CASE("evaluator matches the reference semantics", "[eval]") {
  Rng rng(41);
  std::size_t cases = 0;
  for (int k = 0; k < 600; ++k) {
    std::size_t d = 1 + k % 3;
    auto g = random_graph(rng, kSig, d == 1 ? 3 : 2);
    Formula f = random_formula(rng, kSig, {.arity = d, .size = rng.between(1, 9)});
    // Keep the subset enumeration small enough for nested fixpoints.
    while (fixpoint_depth(f) > 2) f = random_formula(rng, kSig, {.arity = d, .size = rng.between(1, 9)});
    if (d > 1 && rng.chance(1, 2)) {
      std::vector<std::size_t> map(d);
      for (auto& x : map) x = rng.below(d);
      f = conj(replace(map, f), random_formula(rng, kSig, {.arity = d, .size = 3, .fixpoints = false}));
      f = rename_apart(f);
    }
    check_against_oracle(g, f, d);
    ++cases;
  }
  CHECK(cases == 600);
}

TEST_CASE("dualities", "[eval]") {
  Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    std::size_t d = 1 + k % 2;
    auto g = random_graph(rng, kSig, 4);
    auto f = random_formula(rng, kSig, {.arity = d, .size = rng.between(1, 8), .fixpoints = false});
    auto box_set = evaluate(g, box("a", d - 1, f), d);
    CHECK(box_set == evaluate(g, neg(diamond("a", d - 1, neg(f))), d));
    auto body = disj(f, diamond("b", 0, var("Z")));
    auto least = evaluate(g, mu("Z", body), d);
    auto dual = evaluate(g, neg(nu("Z", neg(disj(f, diamond("b", 0, neg(var("Z"))))))), d);
    CHECK(least == dual);
    CHECK(evaluate(g, conj(f, neg(f)), d).empty());
  }
}

TEST_CASE("environments and errors", "[eval]") {
  auto g = example_graph();
  TupleSet s(3, 1);
  s.insert(std::vector<NodeId>{2});
  Environment env = Environment{}.extend("X", s);
  CHECK(evaluate(g, diamond("a", 0, var("X")), 1, env).tuples() == std::vector<std::vector<NodeId>>{{1}});
  CHECK(env.find("Y") == nullptr);
  CHECK_THROWS_AS(evaluate(g, var("Y"), 1), InputError);
  CHECK_THROWS_AS(models(g, var("X"), 1), InputError);
  CHECK_THROWS_AS(evaluate(g, color("f", 1), 1), InputError);
  CHECK_THROWS_AS(evaluate(g, color("zz", 0), 1), InputError);
  CHECK_THROWS_AS(evaluate(g, tt(), 0), InputError);

  CHECK_THROWS_AS(evaluate(g, tt(), 3, {}, EvalOptions{.max_tuples = 20}), ResourceError);
  CHECK_NOTHROW(evaluate(g, tt(), 3, {}, EvalOptions{.max_tuples = 27}));

  EvalStats stats;
  evaluate(g, parse_formula("mu X. f | <a>X", g.signature(), 1), 1, {}, {}, &stats);
  CHECK(stats.fixpoint_rounds >= 2);
}

TEST_CASE("monofication preserves truth", "[eval]") {
  Rng rng(43);
  Signature base({"a", "b"}, {"f"});
  for (int k = 0; k < 200; ++k) {
    std::size_t d = 1 + k % 2;
    auto g = random_graph(rng, base, 3);
    auto f = random_formula(rng, base, {.arity = d + 1, .size = rng.between(1, 10), .d_rooted = true});
    CHECK(models(g, f, d + 1) == models(power(g, d), monofy(f, d + 1), 1));
  }
}
