#include <catch2/catch_amalgamated.hpp>

#include "polymu/dbisim.hpp"
#include "polymu/error.hpp"
#include "polymu/eval.hpp"
#include "polymu/fixtures.hpp"
#include "polymu/formula_io.hpp"
#include "polymu/generators.hpp"
#include "polymu/random.hpp"
#include "polymu/transforms.hpp"

using namespace polymu;

namespace {

const Signature kBase({"a"}, {"f"});
const Signature kBaseAb({"a", "b"}, {"f"});

bool only_atomic_negation(const Formula& f) {
  switch (f.op()) {
    case Op::kNot: return f.child().op() == Op::kColor || f.child().op() == Op::kVar;
    case Op::kAnd:
    case Op::kOr: return only_atomic_negation(f.left()) && only_atomic_negation(f.right());
    case Op::kTrue:
    case Op::kFalse:
    case Op::kColor:
    case Op::kVar: return true;
    default: return only_atomic_negation(f.child());
  }
}

void collect_binders(const Formula& f, std::vector<std::string>& out) {
  if (is_fixpoint(f.op())) out.push_back(f.name());
  if (f.op() == Op::kAnd || f.op() == Op::kOr) {
    collect_binders(f.left(), out);
    collect_binders(f.right(), out);
  } else if (f.op() != Op::kTrue && f.op() != Op::kFalse && f.op() != Op::kColor && f.op() != Op::kVar) {
    collect_binders(f.child(), out);
  }
}

}  // namespace

TEST_CASE("parse examples", "[logic]") {
  auto f = parse_formula("<a@0>(f@0 & <a@1>[a@1]f@1)", kBase, 2);
  CHECK(f == diamond("a", 0, conj(color("f", 0), diamond("a", 1, box("a", 1, color("f", 1))))));

  auto uni = parse_formula("mu X. f@0 | <a@0>X | <b@0>X", kBaseAb, 1);
  CHECK(uni == mu("X", disj(disj(color("f"), diamond("a", 0, var("X"))), diamond("b", 0, var("X")))));
  CHECK(parse_formula("mu X. f | <a>X | <b>X", kBaseAb, 1) == uni);

  CHECK(parse_formula("tt & ff", kBase, 1) == conj(tt(), ff()));
  CHECK(parse_formula("~f | f & tt", kBase, 1) == disj(neg(color("f")), conj(color("f"), tt())));
  CHECK(parse_formula("%{1,0} f@0", kBase, 2) == replace({1, 0}, color("f", 0)));
  CHECK(parse_formula("nu Y1. [a]Y1 & f", kBase, 1) == nu("Y1", conj(box("a", 0, var("Y1")), color("f"))));

  // Lifted names at arity 1.
  auto lifted = lift_signature(kBase, 2);
  CHECK(parse_formula("<rst@1>f@0", lifted, 1) == diamond("rst@1", 0, color("f@0", 0)));
}

TEST_CASE("parse errors", "[logic]") {
  CHECK_THROWS_AS(parse_formula("f@2", kBase, 2), InputError);
  CHECK_THROWS_WITH(parse_formula("f@2", kBase, 2), Catch::Matchers::ContainsSubstring("out of range"));
  CHECK_THROWS_WITH(parse_formula("<c>f", kBase, 1), Catch::Matchers::ContainsSubstring("'c'"));
  CHECK_THROWS_WITH(parse_formula("f &", kBase, 1), Catch::Matchers::ContainsSubstring("position"));
  CHECK_THROWS_AS(parse_formula("(f", kBase, 1), InputError);
  CHECK_THROWS_AS(parse_formula("f f", kBase, 1), InputError);
  CHECK_THROWS_AS(parse_formula("mu X. ~X", kBase, 1), InputError);
  CHECK_THROWS_AS(parse_formula("mu X. X & mu X. X", kBase, 1), InputError);
  CHECK_THROWS_AS(parse_formula("%{0} f@0", kBase, 2), InputError);
  CHECK_THROWS_AS(parse_formula("f", kBase, 0), InputError);
  // Negation twice is positive again.
  CHECK_NOTHROW(parse_formula("mu X. ~~X", kBase, 1));
}

TEST_CASE("printing", "[logic]") {
  auto f = parse_formula("<a@0>(f@0 & <a@1>[a@1]f@1)", kBase, 2);
  CHECK(print_formula(f, 2) == "<a@0>(f@0 & <a@1>[a@1]f@1)");
  CHECK(print_formula(replace({1, 0}, color("f", 0)), 2) == "%{1,0}f@0");
  auto uni = parse_formula("mu X. f | <a>X | <b>X", kBaseAb, 1);
  CHECK(parse_formula(print_formula(uni, 1), kBaseAb, 1) == uni);
  CHECK(print_formula(uni, 1) == print_formula(parse_formula(print_formula(uni, 1), kBaseAb, 1), 1));
  CHECK(print_formula(conj(disj(color("f"), tt()), color("f")), 1) == "(f | tt) & f");
  CHECK(print_formula(conj(mu("X", var("X")), color("f")), 1) == "(mu X. X) & f");
  CHECK(print_formula(conj(color("f"), mu("X", var("X"))), 1) == "f & mu X. X");
}

TEST_CASE("print and parse round trip on random formulas", "[logic]") {
  Rng rng(31);
  std::size_t checked = 0;
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    for (int k = 0; k < 300; ++k) {
      FormulaShape shape;
      shape.arity = arity;
      shape.size = rng.between(1, 14);
      auto f = random_formula(rng, kBaseAb, shape);
      auto text = print_formula(f, arity);
      auto back = parse_formula(text, kBaseAb, arity);
      CHECK(back == f);
      CHECK(print_formula(back, arity) == text);
      CHECK(formula_size(f) == shape.size);
      ++checked;
    }
  }
  auto lifted = lift_signature(kBaseAb, 2);
  for (int k = 0; k < 200; ++k) {
    auto f = random_formula(rng, lifted, {.arity = 1, .size = rng.between(1, 12)});
    CHECK(parse_formula(print_formula(f, 1), lifted, 1) == f);
  }
  CHECK(checked == 900);
}

TEST_CASE("free variables and renaming", "[logic]") {
  auto f = conj(mu("X", disj(var("X"), var("Z"))), nu("X", conj(var("X"), var("W"))));
  CHECK(free_variables(f) == std::set<std::string>{"W", "Z"});
  CHECK_FALSE(is_closed(f));
  CHECK_THROWS_AS(validate(f, kBase, 1), InputError);
  auto r = rename_apart(f);
  CHECK_NOTHROW(validate(r, kBase, 1));
  CHECK(free_variables(r) == free_variables(f));
  std::vector<std::string> binders;
  collect_binders(r, binders);
  CHECK(binders == std::vector<std::string>{"X", "X_1"});

  auto g = mu("Z", conj(var("Z"), mu("Z", var("Z"))));
  auto rg = rename_apart(g);
  CHECK(rg == mu("Z", conj(var("Z"), mu("Z_1", var("Z_1")))));
}

TEST_CASE("d-rootedness", "[logic]") {
  auto f = parse_formula("<a@0>(f@0 & <a@1>[a@1]f@1)", kBase, 3);
  CHECK(check_d_rooted(f, 3));
  CHECK_FALSE(check_d_rooted(color("f", 2), 3));
  CHECK_FALSE(check_d_rooted(replace({1, 0, 2}, color("f", 0)), 3));
  CHECK(check_d_rooted(replace({2, 1, 2}, color("f", 0)), 3));
  CHECK(check_d_rooted(replace(reset_map(1, 2), color("f", 1)), 3));
  CHECK_FALSE(check_d_rooted(replace({2, 2, 2}, color("f", 0)), 3));
  CHECK_FALSE(check_d_rooted(tt(), 1));
  CHECK(reset_map(0, 2) == std::vector<std::size_t>{2, 1, 2});
}

TEST_CASE("monofication and polyfication", "[logic]") {
  auto f = parse_formula("<a@0>(f@0 & <a@1>[a@1]f@1)", kBase, 3);
  auto m = monofy(f, 3);
  CHECK(m == diamond("a@0", 0, conj(color("f@0"), diamond("a@1", 0, box("a@1", 0, color("f@1"))))));
  CHECK(print_formula(m, 1) == "<a@0>(f@0 & <a@1>[a@1]f@1)");
  CHECK(polyfy(m, 2) == f);

  auto r = replace(reset_map(0, 2), color("f", 1));
  CHECK(monofy(r, 3) == diamond("rst@0", 0, color("f@1")));
  CHECK(polyfy(monofy(r, 3), 2) == r);
  CHECK(monofy(tt(), 3) == tt());
  CHECK(polyfy(tt(), 2) == tt());

  CHECK(polyfy(box("rst@1", 0, color("f@0")), 2) == replace(reset_map(1, 2), color("f", 0)));
  CHECK_THROWS_AS(monofy(color("f", 2), 3), InputError);
  CHECK_THROWS_AS(polyfy(color("f@2"), 2), InputError);
  CHECK_THROWS_AS(polyfy(replace({0}, tt()), 1), InputError);

  Rng rng(32);
  auto lifted = lift_signature(kBaseAb, 2);
  for (int k = 0; k < 300; ++k) {
    FormulaShape shape{.arity = 3, .size = rng.between(1, 14), .d_rooted = true};
    auto g = random_formula(rng, kBaseAb, shape);
    REQUIRE(check_d_rooted(g, 3));
    auto mg = monofy(g, 3);
    CHECK_NOTHROW(validate(mg, lifted, 1));
    CHECK(polyfy(mg, 2) == g);

    auto psi = random_formula(rng, lifted, {.arity = 1, .size = rng.between(1, 14), .reset_boxes = false});
    auto ppsi = polyfy(psi, 2);
    CHECK(check_d_rooted(ppsi, 3));
    CHECK(monofy(ppsi, 3) == psi);
  }
}

TEST_CASE("negation normal form keeps the semantics", "[logic]") {
  Rng rng(33);
  for (int k = 0; k < 300; ++k) {
    std::size_t arity = 1 + k % 2;
    auto f = random_formula(rng, kBaseAb, {.arity = arity, .size = rng.between(1, 12)});
    auto n = to_nnf(f);
    CHECK(only_atomic_negation(n));
    CHECK_NOTHROW(validate(n, kBaseAb, arity));
    auto g = random_graph(rng, kBaseAb, 3);
    CHECK(evaluate(g, n, arity) == evaluate(g, f, arity));
  }
  CHECK(to_nnf(neg(mu("X", disj(color("f"), diamond("a", 0, var("X")))))) ==
        nu("X", conj(neg(color("f")), box("a", 0, var("X")))));
  CHECK(erase_replace(replace({1, 0}, neg(replace({0, 0}, color("f", 1))))) == neg(color("f", 1)));
}

TEST_CASE("derived connectives", "[logic]") {
  CHECK(conj_all({}) == tt());
  CHECK(disj_all({}) == ff());
  CHECK(conj_all({color("f"), tt(), ff()}) == conj(conj(color("f"), tt()), ff()));
  CHECK(implies(color("f"), tt()) == disj(neg(color("f")), tt()));
  auto g = example_graph();
  for (auto [a, b] : std::vector<std::pair<Formula, Formula>>{{color("f"), tt()},
                                                              {diamond("a", 0, color("f")), color("f")},
                                                              {ff(), ff()}}) {
    auto lhs = evaluate(g, iff(a, b), 1);
    auto ea = evaluate(g, a, 1), eb = evaluate(g, b, 1);
    for (NodeId v = 0; v < 3; ++v) CHECK(lhs.test(v) == (ea.test(v) == eb.test(v)));
  }
}

TEST_CASE("bisimulation formula", "[logic]") {
  auto p = example_power();
  auto phi = gen_bisim_formula(0, 1, kBase, 2);
  CHECK(is_closed(phi));
  CHECK_NOTHROW(validate(phi, p.signature(), 2));
  auto set = evaluate(p, phi, 2);
  std::vector<NodeId> pair{*p.find_node("(1,0)"), *p.find_node("(0,1)")};
  CHECK(set.contains(pair));
  CHECK(set.to_relation() == largest_d_bisimulation(p).at(0, 1));
  CHECK_THROWS_AS(gen_bisim_formula(0, 2, kBase, 2), InputError);

  Rng rng(34);
  for (int k = 0; k < 120; ++k) {
    std::size_t d = 1 + k % 2;
    auto lifted = lift_signature(k % 3 ? kBase : kBaseAb, d);
    auto base = LiftedSignature::detect(lifted).base;
    auto g = random_graph(rng, lifted, d == 1 ? 9 : 6);
    auto fam = largest_d_bisimulation(g);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        CHECK(evaluate(g, gen_bisim_formula(i, j, base, d), 2).to_relation() == fam.at(i, j));
  }
}

TEST_CASE("allbox", "[logic]") {
  auto loop = GraphBuilder(lift_signature(kBase, 2))
                  .node("s", {"f@0"})
                  .edge("s", "a@0", "s")
                  .edge("s", "a@1", "s")
                  .edge("s", "rst@0", "s")
                  .edge("s", "rst@1", "s")
                  .root("s")
                  .build();
  auto phi = color("f@0", 0);
  CHECK(evaluate(loop, gen_allbox(0, phi, kBase, 2), 2) == evaluate(loop, phi, 2));
  CHECK(evaluate(loop, gen_allbox(0, neg(phi), kBase, 2), 2) == evaluate(loop, neg(phi), 2));

  auto p = example_power();
  auto all_tt = evaluate(p, gen_allbox(0, tt(), kBase, 2), 2);
  CHECK(all_tt.size() == all_tt.universe());
  CHECK_FALSE(models(p, gen_allbox(0, neg(color("f@0", 0)), kBase, 2), 2));
  CHECK(models(p, gen_allbox(0, disj(color("f@0", 0), neg(color("f@0", 0))), kBase, 2), 2));

  // The fresh variable avoids the argument's binders.
  auto inner = nu("Y", conj(var("Y"), tt()));
  auto wrapped = gen_allbox(1, inner, kBase, 2);
  CHECK_NOTHROW(validate(wrapped, p.signature(), 2));
}

TEST_CASE("power formulas", "[logic]") {
  auto p = example_power();
  CHECK(models(p, gen_per(2, kBase), 2));
  CHECK(models(p, gen_rst(2, kBase), 2));
  CHECK(models(p, gen_pow(2, kBase), 2));
  CHECK(models(p, gen_per(2, kBase, AllboxScope::kBaseActions), 2));
  CHECK(models(p, gen_rst(2, kBase, AllboxScope::kBaseActions), 2));

  auto single = GraphBuilder(kBase).node("s", {"f"}).edge("s", "a", "s").root("s").build();
  std::vector<LabeledGraph> fs{example_graph(), single};
  auto mixed = product(fs);
  CHECK(models(mixed, gen_per(2, kBase), 2));
  CHECK(models(mixed, gen_rst(2, kBase), 2));
  CHECK_FALSE(models(mixed, gen_pow(2, kBase), 2));

  CHECK(gen_per(1, kBase) == tt());
  CHECK(gen_pow(1, kBase) == rename_apart(gen_bisim_formula(0, 0, kBase, 1)));
  Rng rng(35);
  for (int k = 0; k < 30; ++k) {
    auto g = random_graph(rng, lift_signature(kBase, 1), 5);
    CHECK(models(g, gen_pow(1, kBase), 2));
  }
  for (std::size_t d = 1; d <= 3; ++d) {
    CHECK(is_closed(gen_per(d, kBaseAb)));
    CHECK_NOTHROW(validate(gen_rst(d, kBaseAb), lift_signature(kBaseAb, d), 2));
    CHECK_NOTHROW(validate(gen_pow(d, kBaseAb), lift_signature(kBaseAb, d), 2));
  }
}

TEST_CASE("logic and relational power detection agree", "[logic]") {
  Rng rng(36);
  for (int k = 0; k < 80; ++k) {
    std::size_t d = 1 + k % 2;
    auto lifted = lift_signature(kBase, d);
    LabeledGraph g = k % 4 == 0 ? power(random_graph(rng, kBase, 3), d) : random_graph(rng, lifted, 4);
    if (k % 4 == 1) g = perturb(rng, power(random_graph(rng, kBase, 2), d));
    CHECK(power_conditions(g, d, PowerMethod::kDBisim) == power_conditions(g, d, PowerMethod::kLogic));
  }
}
