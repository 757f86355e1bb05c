#include "polymu/generators.hpp"

#include <set>

#include "polymu/error.hpp"

namespace polymu {
namespace {

void check_indices(std::size_t i, std::size_t j, std::size_t d) {
  if (d == 0) throw InputError("d must be positive", "d");
  if (i >= d || j >= d) throw InputError("component index out of range for d = " + std::to_string(d), "index");
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::kVar:
    case Op::kMu:
    case Op::kNu: out.insert(f.name()); break;
    default: break;
  }
  if (f.op() == Op::kAnd || f.op() == Op::kOr) {
    collect_vars(f.left(), out);
    collect_vars(f.right(), out);
  } else if (f.op() == Op::kNot || is_modal(f.op()) || is_fixpoint(f.op()) || f.op() == Op::kReplace) {
    collect_vars(f.child(), out);
  }
}

std::string fresh_var(const Formula& f, const std::string& base) {
  std::set<std::string> used;
  collect_vars(f, used);
  std::string name = base;
  for (std::size_t k = 1; used.count(name); ++k) name = base + "_" + std::to_string(k);
  return name;
}

}  // namespace

Formula gen_bisim_formula(std::size_t i, std::size_t j, const Signature& base, std::size_t d) {
  check_indices(i, j, d);
  const std::string x = "X" + std::to_string(i) + std::to_string(j);
  std::vector<Formula> colors;
  for (const auto& c : base.colors())
    colors.push_back(iff(color(indexed_name(c, i), 0), color(indexed_name(c, j), 1)));
  std::vector<Formula> moves;
  for (const auto& a : base.actions()) {
    std::string ai = indexed_name(a, i), aj = indexed_name(a, j);
    moves.push_back(conj(box(ai, 0, diamond(aj, 1, var(x))), box(aj, 1, diamond(ai, 0, var(x)))));
  }
  return nu(x, conj(conj_all(colors), conj_all(moves)));
}

Formula gen_allbox(std::size_t i, const Formula& f, const Signature& base, std::size_t d, AllboxScope scope) {
  if (d == 0) throw InputError("d must be positive", "d");
  const std::string y = fresh_var(f, "Y");
  std::vector<Formula> parts{f};
  for (const auto& a : base.actions())
    for (std::size_t j = 0; j < d; ++j) parts.push_back(box(indexed_name(a, j), i, var(y)));
  if (scope == AllboxScope::kAllActions)
    for (std::size_t j = 0; j < d; ++j) parts.push_back(box(indexed_name("rst", j), i, var(y)));
  return rename_apart(nu(y, conj_all(parts)));
}

Formula gen_per(std::size_t d, const Signature& base, AllboxScope scope) {
  if (d == 0) throw InputError("d must be positive", "d");
  if (d == 1) return tt();
  std::vector<Formula> clauses;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      Formula bis = gen_bisim_formula(j, j, base, d);
      std::vector<Formula> moves;
      for (const auto& a : base.actions()) moves.push_back(box(indexed_name(a, i), 0, bis));
      moves.push_back(box(indexed_name("rst", i), 0, bis));
      clauses.push_back(implies(bis, conj_all(moves)));
    }
  }
  Formula inner = gen_allbox(1, rename_apart(conj_all(clauses)), base, d, scope);
  return rename_apart(gen_allbox(0, inner, base, d, scope));
}

Formula gen_rst(std::size_t d, const Signature& base, AllboxScope scope) {
  if (d == 0) throw InputError("d must be positive", "d");
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < d; ++i)
    parts.push_back(box(indexed_name("rst", i), 0, gen_bisim_formula(i, i, base, d)));
  return rename_apart(gen_allbox(0, conj_all(parts), base, d, scope));
}

Formula gen_pow(std::size_t d, const Signature& base) {
  if (d == 0) throw InputError("d must be positive", "d");
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) parts.push_back(gen_bisim_formula(i, j, base, d));
  return rename_apart(conj_all(parts));
}

}  // namespace polymu
