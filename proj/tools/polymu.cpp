// polymu: command-line front end for the polyadic mu-calculus toolchain.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polymu/acceptance.hpp"
#include "polymu/apt.hpp"
#include "polymu/bisim.hpp"
#include "polymu/dbisim.hpp"
#include "polymu/error.hpp"
#include "polymu/eval.hpp"
#include "polymu/fixtures.hpp"
#include "polymu/formula_io.hpp"
#include "polymu/graph_json.hpp"
#include "polymu/nonuniv.hpp"
#include "polymu/pumping.hpp"
#include "polymu/transforms.hpp"
#include "polymu/xcheck.hpp"

namespace {

using namespace polymu;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path, "file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string graph, graph2, formula, method = "both", path, output, what;
  std::size_t arity = 1, d = 0, component = 0, depth = 2, branching = 2, i = 0, j = 0, k = 1, iters = 0;
  std::uint64_t seed = 1;
  int criterion = 0;
};

LabeledGraph load_graph(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string("missing ") + flag, flag);
  return read_graph(slurp(path));
}

std::string formula_text(const Options& o) {
  if (o.formula.empty()) throw InputError("missing --formula", "--formula");
  if (o.formula[0] == '@') return slurp(o.formula.substr(1));
  return o.formula;
}

std::vector<NodeId> parse_path(const FiniteTree& t, const std::string& text) {
  std::vector<NodeId> out;
  std::stringstream in(text);
  std::string id;
  while (std::getline(in, id, ',')) {
    auto v = t.graph().find_node(id);
    if (!v) throw InputError("unknown node '" + id + "'", "--path");
    out.push_back(*v);
  }
  return out;
}

std::size_t lifted_d(const LabeledGraph& g, std::size_t given) {
  return given ? given : LiftedSignature::detect(g.signature()).d;
}

PowerMethod parse_method(const std::string& m) {
  if (m == "dbisim") return PowerMethod::kDBisim;
  if (m == "logic") return PowerMethod::kLogic;
  if (m == "both") return PowerMethod::kBoth;
  throw InputError("unknown method '" + m + "' (dbisim, logic, both)", "--method");
}

std::string run(const std::string& cmd, const Options& o, int& status) {
  if (cmd == "mc") {
    LabeledGraph g = load_graph(o.graph, "--graph");
    Formula f = parse_formula(formula_text(o), g.signature(), o.arity);
    return models(g, f, o.arity) ? "true\n" : "false\n";
  }
  if (cmd == "bisim") {
    LabeledGraph g = load_graph(o.graph, "--graph"), h = load_graph(o.graph2, "--graph2");
    return format_pairs(largest_bisimulation(g, h), g, h);
  }
  if (cmd == "quotient") return write_graph(quotient(load_graph(o.graph, "--graph"))) + "\n";
  if (cmd == "dbisim") {
    LabeledGraph g = load_graph(o.graph, "--graph");
    DBisimFamily fam = largest_d_bisimulation(g);
    if (o.i >= fam.d || o.j >= fam.d) throw InputError("component out of range", "--i/--j");
    return format_pairs(fam.at(o.i, o.j), g, g);
  }
  if (cmd == "detect-power") {
    LabeledGraph g = load_graph(o.graph, "--graph");
    return detect_power(g, lifted_d(g, o.d), parse_method(o.method)) ? "true\n" : "false\n";
  }
  if (cmd == "factor") return write_graph(factor(load_graph(o.graph, "--graph"), o.component)) + "\n";
  if (cmd == "power") {
    if (o.d == 0) throw InputError("missing -d", "-d");
    return write_graph(power(load_graph(o.graph, "--graph"), o.d)) + "\n";
  }
  if (cmd == "product") {
    std::vector<LabeledGraph> parts{load_graph(o.graph, "--graph"), load_graph(o.graph2, "--graph2")};
    return write_graph(product(parts)) + "\n";
  }
  if (cmd == "unfold") return write_graph(unfold(load_graph(o.graph, "--graph"), o.depth).graph()) + "\n";
  if (cmd == "mono") {
    LabeledGraph g = load_graph(o.graph, "--graph");
    Formula f = parse_formula(formula_text(o), g.signature(), o.arity);
    return print_formula(monofy(f, o.arity), 1) + "\n";
  }
  if (cmd == "poly") {
    LabeledGraph g = load_graph(o.graph, "--graph");
    std::size_t d = lifted_d(g, o.d);
    Formula f = parse_formula(formula_text(o), g.signature(), 1);
    return print_formula(polyfy(f, d), d + 1) + "\n";
  }
  if (cmd == "nonuniv1") return verdict_json(one_letter_non_universal(load_graph(o.graph, "--graph"))) + "\n";
  if (cmd == "nonuniv2") return verdict_json(two_letter_non_universal(load_graph(o.graph, "--graph"))) + "\n";
  if (cmd == "nonuniv1-lifted" || cmd == "nonuniv2-lifted") {
    LabeledGraph g = load_graph(o.graph, "--graph");
    std::size_t d = lifted_d(g, o.d);
    NonUnivVerdict v = cmd == "nonuniv1-lifted" ? one_lifted_non_universal(g, d) : two_lifted_non_universal(g, d);
    return verdict_json(v) + "\n";
  }
  if (cmd == "pump") {
    FiniteTree t(load_graph(o.graph, "--graph"));
    auto path = parse_path(t, o.path);
    return write_graph(pump(t, path, o.i, o.j, o.k).graph()) + "\n";
  }
  if (cmd == "pump-find") {
    FiniteTree t(load_graph(o.graph, "--graph"));
    Formula f = parse_formula(formula_text(o), t.graph().signature(), 1);
    auto path = parse_path(t, o.path);
    auto [i, j] = find_pumping_pair(formula_to_apt(f, t.graph().signature()), t, path);
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")\n";
  }
  if (cmd == "apt") {
    LabeledGraph g = load_graph(o.graph, "--graph");
    return format_apt(formula_to_apt(parse_formula(formula_text(o), g.signature(), 1), g.signature()));
  }
  if (cmd == "gen") {
    if (o.what == "ex1") return write_graph(example_graph()) + "\n";
    if (o.what == "power-ex1") return write_graph(example_power()) + "\n";
    if (o.what == "rword") {
      auto word = example_word();
      return write_graph(gen_rword_tree(Signature({"a", "b"}, {"f"}), word, o.branching, o.depth).graph()) + "\n";
    }
    throw InputError("unknown fixture '" + o.what + "' (ex1, power-ex1, rword)", "gen");
  }
  if (cmd == "xcheck") {
    RunConfig config;
    config.seed = o.seed;
    config.iterations = o.iters;
    std::vector<CriterionResult> results;
    if (o.criterion) results.push_back(run_criterion(o.criterion, config));
    else results = run_all(config);
    std::string out;
    std::size_t failed = 0;
    for (const auto& r : results) {
      out += format_result(r) + "\n";
      failed += r.failures;
    }
    out += "failures: " + std::to_string(failed) + "\n";
    if (failed) status = 3;
    return out;
  }
  throw InputError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyadic mu-calculus toolchain"};
  app.require_subcommand(1, 1);
  Options o;

  auto graph = [&](CLI::App* s) { s->add_option("--graph", o.graph, "graph JSON file"); };
  auto graph2 = [&](CLI::App* s) { s->add_option("--graph2", o.graph2, "second graph JSON file"); };
  auto formula = [&](CLI::App* s) { s->add_option("--formula", o.formula, "formula text, or @PATH"); };
  auto arity = [&](CLI::App* s) { s->add_option("--arity", o.arity, "formula arity"); };
  auto dim = [&](CLI::App* s) { s->add_option("-d", o.d, "dimension d (detected from the signature if omitted)"); };

  struct Spec {
    const char* name;
    const char* help;
  };
  const std::vector<Spec> specs = {
      {"mc", "model check: does the root tuple satisfy the formula"},
      {"bisim", "largest bisimulation between two graphs"},
      {"quotient", "bisimulation quotient"},
      {"dbisim", "relation i,j of the largest d-bisimulation"},
      {"detect-power", "is the lifted graph bisimilar to a d-power"},
      {"factor", "component graph of a lifted graph"},
      {"power", "d-power of a graph"},
      {"product", "2-product of two graphs"},
      {"unfold", "depth-bounded tree unfolding"},
      {"mono", "monofication of a d-rooted formula"},
      {"poly", "polyfication of a lifted formula"},
      {"nonuniv1", "one-letter NFA non-universality"},
      {"nonuniv1-lifted", "lifted one-letter non-universality"},
      {"nonuniv2", "two-letter NFA non-universality"},
      {"nonuniv2-lifted", "lifted two-letter non-universality"},
      {"pump", "pump a tree between two path nodes"},
      {"pump-find", "find a pumping pair on a root path"},
      {"apt", "print the automaton of a formula"},
      {"gen", "emit a fixture graph"},
      {"xcheck", "randomized cross-validation suites"},
  };
  for (const auto& spec : specs) {
    CLI::App* s = app.add_subcommand(spec.name, spec.help);
    s->add_option("-o", o.output, "write the result to PATH");
    const std::string n = spec.name;
    if (n != "gen" && n != "xcheck") graph(s);
    if (n == "bisim" || n == "product") graph2(s);
    if (n == "mc" || n == "mono" || n == "poly" || n == "pump-find" || n == "apt") formula(s);
    if (n == "mc" || n == "mono") arity(s);
    if (n == "detect-power" || n == "power" || n == "poly" || n.starts_with("nonuniv")) dim(s);
    if (n == "detect-power") s->add_option("--method", o.method, "dbisim, logic or both");
    if (n == "factor") s->add_option("--component", o.component, "component index");
    if (n == "unfold" || n == "gen") s->add_option("--depth", o.depth, "depth");
    if (n == "gen") {
      s->add_option("what", o.what, "ex1, power-ex1 or rword")->required();
      s->add_option("--branching", o.branching, "rword branching");
    }
    if (n == "dbisim" || n == "pump") {
      s->add_option("--i", o.i, "index i");
      s->add_option("--j", o.j, "index j");
    }
    if (n == "pump") s->add_option("--k", o.k, "number of copies");
    if (n == "pump" || n == "pump-find") s->add_option("--path", o.path, "root path as node ids v0,v1,...");
    if (n == "xcheck") {
      s->add_option("--seed", o.seed, "PRNG seed");
      s->add_option("--iters", o.iters, "samples per randomized criterion (default: per criterion)");
      s->add_option("--criterion", o.criterion, "run a single criterion 1..12");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int status = 0;
  try {
    std::string out = run(app.get_subcommands().front()->get_name(), o, status);
    if (o.output.empty()) {
      std::cout << out;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw InputError("cannot write " + o.output, "-o");
      file << out;
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
