#include "polymu/transforms.hpp"

#include <set>

#include "polymu/error.hpp"

namespace polymu {
namespace {

bool is_reset_map(const std::vector<std::size_t>& map, std::size_t d) {
  if (map.size() != d + 1 || map[d] != d) return false;
  std::size_t moved = 0;
  for (std::size_t k = 0; k < d; ++k) {
    if (map[k] == d) ++moved;
    else if (map[k] != k) return false;
  }
  return moved == 1;
}

std::size_t reset_target(const std::vector<std::size_t>& map) {
  for (std::size_t k = 0;; ++k)
    if (map[k] == map.size() - 1) return k;
}

template <typename Fn>
Formula map_children(const Formula& f, Fn&& fn) {
  switch (f.op()) {
    case Op::kNot: return neg(fn(f.child()));
    case Op::kAnd: return conj(fn(f.left()), fn(f.right()));
    case Op::kOr: return disj(fn(f.left()), fn(f.right()));
    case Op::kDiamond: return diamond(f.name(), f.index(), fn(f.child()));
    case Op::kBox: return box(f.name(), f.index(), fn(f.child()));
    case Op::kMu: return mu(f.name(), fn(f.child()));
    case Op::kNu: return nu(f.name(), fn(f.child()));
    case Op::kReplace: return replace(f.map(), fn(f.child()));
    default: return f;
  }
}

Formula monofy_rec(const Formula& f, std::size_t d) {
  switch (f.op()) {
    case Op::kColor: return color(indexed_name(f.name(), f.index()), 0);
    case Op::kDiamond: return diamond(indexed_name(f.name(), f.index()), 0, monofy_rec(f.child(), d));
    case Op::kBox: return box(indexed_name(f.name(), f.index()), 0, monofy_rec(f.child(), d));
    case Op::kReplace:
      return diamond(indexed_name("rst", reset_target(f.map())), 0, monofy_rec(f.child(), d));
    default: return map_children(f, [d](const Formula& g) { return monofy_rec(g, d); });
  }
}

std::pair<std::string, std::size_t> split_lifted(const std::string& name, std::size_t d) {
  auto split = split_indexed_name(name);
  if (!split) throw InputError("'" + name + "' is not a lifted name", "formula");
  if (split->second >= d)
    throw InputError("'" + name + "' has index out of range for d = " + std::to_string(d), "formula");
  return *split;
}

Formula polyfy_rec(const Formula& f, std::size_t d) {
  switch (f.op()) {
    case Op::kColor: {
      auto [base, i] = split_lifted(f.name(), d);
      return color(base, i);
    }
    case Op::kDiamond:
    case Op::kBox: {
      auto [base, i] = split_lifted(f.name(), d);
      Formula child = polyfy_rec(f.child(), d);
      if (base == "rst") return replace(reset_map(i, d), child);
      return f.op() == Op::kDiamond ? diamond(base, i, child) : box(base, i, child);
    }
    case Op::kReplace: throw InputError("replacement in an arity-1 formula", "formula");
    default: return map_children(f, [d](const Formula& g) { return polyfy_rec(g, d); });
  }
}

Formula nnf_rec(const Formula& f, bool negated, std::set<std::string>& bound) {
  switch (f.op()) {
    case Op::kTrue: return negated ? ff() : tt();
    case Op::kFalse: return negated ? tt() : ff();
    case Op::kColor: return negated ? neg(f) : f;
    case Op::kVar: return negated && !bound.count(f.name()) ? neg(f) : f;
    case Op::kNot: return nnf_rec(f.child(), !negated, bound);
    case Op::kAnd:
    case Op::kOr: {
      Formula l = nnf_rec(f.left(), negated, bound);
      Formula r = nnf_rec(f.right(), negated, bound);
      return (f.op() == Op::kAnd) != negated ? conj(l, r) : disj(l, r);
    }
    case Op::kDiamond:
    case Op::kBox: {
      Formula c = nnf_rec(f.child(), negated, bound);
      return (f.op() == Op::kDiamond) != negated ? diamond(f.name(), f.index(), c) : box(f.name(), f.index(), c);
    }
    case Op::kMu:
    case Op::kNu: {
      // ~μX.φ = νX.~φ[~X/X]; by positivity every X below sits under the same
      // parity as the binder, so the substituted double negation cancels.
      bool fresh = bound.insert(f.name()).second;
      Formula c = nnf_rec(f.child(), negated, bound);
      if (fresh) bound.erase(f.name());
      return (f.op() == Op::kMu) != negated ? mu(f.name(), c) : nu(f.name(), c);
    }
    case Op::kReplace: return replace(f.map(), nnf_rec(f.child(), negated, bound));
  }
  return f;
}

}  // namespace

std::vector<std::size_t> reset_map(std::size_t j, std::size_t d) {
  std::vector<std::size_t> map(d + 1);
  for (std::size_t k = 0; k <= d; ++k) map[k] = k;
  map[j] = d;
  return map;
}

bool check_d_rooted(const Formula& f, std::size_t arity) {
  if (arity < 2) return false;
  std::size_t d = arity - 1;
  switch (f.op()) {
    case Op::kColor: return f.index() < d;
    case Op::kDiamond:
    case Op::kBox: return f.index() < d && check_d_rooted(f.child(), arity);
    case Op::kReplace: return is_reset_map(f.map(), d) && check_d_rooted(f.child(), arity);
    case Op::kNot:
    case Op::kMu:
    case Op::kNu: return check_d_rooted(f.child(), arity);
    case Op::kAnd:
    case Op::kOr: return check_d_rooted(f.left(), arity) && check_d_rooted(f.right(), arity);
    default: return true;
  }
}

Formula monofy(const Formula& f, std::size_t arity) {
  if (!check_d_rooted(f, arity))
    throw InputError("formula is not d-rooted at arity " + std::to_string(arity), "formula");
  return monofy_rec(f, arity - 1);
}

Formula polyfy(const Formula& f, std::size_t d) {
  if (d == 0) throw InputError("d must be positive", "d");
  return polyfy_rec(f, d);
}

Formula to_nnf(const Formula& f) {
  std::set<std::string> bound;
  return nnf_rec(f, false, bound);
}

Formula erase_replace(const Formula& f) {
  if (f.op() == Op::kReplace) return erase_replace(f.child());
  return map_children(f, [](const Formula& g) { return erase_replace(g); });
}

}  // namespace polymu
