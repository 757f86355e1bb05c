#include "polymu/formula.hpp"

#include <map>
#include <optional>

#include "polymu/error.hpp"

namespace polymu {

Formula::Formula() : node_(std::make_shared<const Node>()) {}

Formula Formula::make(Node node) { return Formula(std::make_shared<const Node>(std::move(node))); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.name != y.name || x.index != y.index || x.map != y.map) return false;
  if (static_cast<bool>(x.left) != static_cast<bool>(y.left)) return false;
  if (static_cast<bool>(x.right) != static_cast<bool>(y.right)) return false;
  if (x.left && !(*x.left == *y.left)) return false;
  if (x.right && !(*x.right == *y.right)) return false;
  return true;
}

Formula tt() { return Formula::make({Op::kTrue}); }
Formula ff() { return Formula::make({Op::kFalse}); }

Formula color(std::string name, std::size_t index) {
  return Formula::make({Op::kColor, std::move(name), index});
}

Formula var(std::string name) { return Formula::make({Op::kVar, std::move(name)}); }

Formula neg(Formula f) {
  return Formula::make({Op::kNot, {}, 0, {}, std::make_shared<const Formula>(std::move(f))});
}

Formula conj(Formula a, Formula b) {
  return Formula::make({Op::kAnd, {}, 0, {}, std::make_shared<const Formula>(std::move(a)),
                        std::make_shared<const Formula>(std::move(b))});
}

Formula disj(Formula a, Formula b) {
  return Formula::make({Op::kOr, {}, 0, {}, std::make_shared<const Formula>(std::move(a)),
                        std::make_shared<const Formula>(std::move(b))});
}

Formula diamond(std::string action, std::size_t index, Formula f) {
  return Formula::make({Op::kDiamond, std::move(action), index, {}, std::make_shared<const Formula>(std::move(f))});
}

Formula box(std::string action, std::size_t index, Formula f) {
  return Formula::make({Op::kBox, std::move(action), index, {}, std::make_shared<const Formula>(std::move(f))});
}

Formula mu(std::string var_name, Formula f) {
  return Formula::make({Op::kMu, std::move(var_name), 0, {}, std::make_shared<const Formula>(std::move(f))});
}

Formula nu(std::string var_name, Formula f) {
  return Formula::make({Op::kNu, std::move(var_name), 0, {}, std::make_shared<const Formula>(std::move(f))});
}

Formula replace(std::vector<std::size_t> map, Formula f) {
  return Formula::make({Op::kReplace, {}, 0, std::move(map), std::make_shared<const Formula>(std::move(f))});
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return tt();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = conj(acc, fs[k]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return ff();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = disj(acc, fs[k]);
  return acc;
}

Formula iff(Formula a, Formula b) { return disj(conj(a, b), conj(neg(a), neg(b))); }

Formula implies(Formula a, Formula b) { return disj(neg(std::move(a)), std::move(b)); }

bool is_fixpoint(Op op) noexcept { return op == Op::kMu || op == Op::kNu; }
bool is_modal(Op op) noexcept { return op == Op::kDiamond || op == Op::kBox; }

namespace {

bool unary(Op op) { return op == Op::kNot || is_modal(op) || is_fixpoint(op) || op == Op::kReplace; }
bool binary(Op op) { return op == Op::kAnd || op == Op::kOr; }

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::kVar:
      if (!bound.count(f.name())) out.insert(f.name());
      return;
    case Op::kMu:
    case Op::kNu: {
      bool fresh = bound.insert(f.name()).second;
      collect_free(f.child(), bound, out);
      if (fresh) bound.erase(f.name());
      return;
    }
    default:
      if (unary(f.op())) collect_free(f.child(), bound, out);
      if (binary(f.op())) {
        collect_free(f.left(), bound, out);
        collect_free(f.right(), bound, out);
      }
  }
}

struct Validator {
  const Signature& sig;
  std::size_t arity;
  std::set<std::string> binders;
  // Variables in scope with the negation parity at their binder.
  std::map<std::string, unsigned> scope;

  void run(const Formula& f, unsigned negations) {
    switch (f.op()) {
      case Op::kTrue:
      case Op::kFalse:
        return;
      case Op::kColor:
        check_index(f.index());
        if (!sig.find_color(f.name())) throw InputError("unknown color '" + f.name() + "'", "formula");
        return;
      case Op::kVar: {
        auto it = scope.find(f.name());
        if (it != scope.end() && (negations - it->second) % 2 != 0)
          throw InputError("variable " + f.name() + " occurs negatively in its fixpoint", "formula");
        return;
      }
      case Op::kNot:
        run(f.child(), negations + 1);
        return;
      case Op::kAnd:
      case Op::kOr:
        run(f.left(), negations);
        run(f.right(), negations);
        return;
      case Op::kDiamond:
      case Op::kBox:
        check_index(f.index());
        if (!sig.find_action(f.name())) throw InputError("unknown action '" + f.name() + "'", "formula");
        run(f.child(), negations);
        return;
      case Op::kMu:
      case Op::kNu:
        if (!binders.insert(f.name()).second)
          throw InputError("variable " + f.name() + " is bound more than once", "formula");
        scope[f.name()] = negations;
        run(f.child(), negations);
        scope.erase(f.name());
        return;
      case Op::kReplace:
        if (f.map().size() != arity)
          throw InputError("replacement map has length " + std::to_string(f.map().size()) + ", arity is " +
                               std::to_string(arity),
                           "formula");
        for (auto k : f.map()) check_index(k);
        run(f.child(), negations);
        return;
    }
  }

  void check_index(std::size_t i) const {
    if (i >= arity)
      throw InputError("index " + std::to_string(i) + " out of range for arity " + std::to_string(arity), "formula");
  }
};

Formula rebuild_unary(const Formula& f, Formula child) {
  switch (f.op()) {
    case Op::kNot: return neg(std::move(child));
    case Op::kDiamond: return diamond(f.name(), f.index(), std::move(child));
    case Op::kBox: return box(f.name(), f.index(), std::move(child));
    case Op::kReplace: return replace(f.map(), std::move(child));
    default: return f;
  }
}

struct Renamer {
  std::set<std::string> used;

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (std::size_t k = 1; used.count(name); ++k) name = base + "_" + std::to_string(k);
    used.insert(name);
    return name;
  }

  Formula run(const Formula& f, std::map<std::string, std::string>& env) {
    switch (f.op()) {
      case Op::kVar: {
        auto it = env.find(f.name());
        return it == env.end() ? f : var(it->second);
      }
      case Op::kMu:
      case Op::kNu: {
        std::string name = fresh(f.name());
        auto saved = env.find(f.name()) == env.end() ? std::nullopt : std::optional(env[f.name()]);
        env[f.name()] = name;
        Formula body = run(f.child(), env);
        if (saved) env[f.name()] = *saved;
        else env.erase(f.name());
        return f.op() == Op::kMu ? mu(name, body) : nu(name, body);
      }
      case Op::kAnd:
      case Op::kOr: {
        Formula l = run(f.left(), env);
        Formula r = run(f.right(), env);
        return f.op() == Op::kAnd ? conj(l, r) : disj(l, r);
      }
      default:
        if (unary(f.op())) return rebuild_unary(f, run(f.child(), env));
        return f;
    }
  }
};

}  // namespace

std::size_t formula_size(const Formula& f) {
  if (binary(f.op())) return 1 + formula_size(f.left()) + formula_size(f.right());
  if (unary(f.op())) return 1 + formula_size(f.child());
  return 1;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return free_variables(f).empty(); }

void validate(const Formula& f, const Signature& sig, std::size_t arity) {
  if (arity == 0) throw InputError("arity must be positive", "arity");
  Validator v{sig, arity, {}, {}};
  v.run(f, 0);
}

Formula rename_apart(const Formula& f) {
  Renamer r;
  r.used = free_variables(f);
  std::map<std::string, std::string> env;
  return r.run(f, env);
}

}  // namespace polymu
