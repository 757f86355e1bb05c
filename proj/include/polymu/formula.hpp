#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "polymu/signature.hpp"

namespace polymu {

enum class Op { kTrue, kFalse, kColor, kVar, kNot, kAnd, kOr, kDiamond, kBox, kMu, kNu, kReplace };

/// Immutable μ^d abstract syntax tree. Copies share structure.
///
/// The arity is not stored in the tree; every consumer takes it explicitly.
/// Color and action names are kept as text and resolved against a signature
/// when the formula is validated or evaluated.
class Formula {
 public:
  Formula();  // tt

  Op op() const noexcept { return node_->op; }
  /// Color, action or variable name.
  const std::string& name() const noexcept { return node_->name; }
  /// Component index of a color or modality.
  std::size_t index() const noexcept { return node_->index; }
  /// Replacement map: position i holds σ(i).
  const std::vector<std::size_t>& map() const noexcept { return node_->map; }
  /// Operand of ~, modalities, fixpoints, replacement; left operand of & and |.
  const Formula& child() const { return *node_->left; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  /// Stable identity of the shared node (for memoization keyed on subterms).
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

  friend Formula tt();
  friend Formula ff();
  friend Formula color(std::string name, std::size_t index);
  friend Formula var(std::string name);
  friend Formula neg(Formula f);
  friend Formula conj(Formula a, Formula b);
  friend Formula disj(Formula a, Formula b);
  friend Formula diamond(std::string action, std::size_t index, Formula f);
  friend Formula box(std::string action, std::size_t index, Formula f);
  friend Formula mu(std::string var_name, Formula f);
  friend Formula nu(std::string var_name, Formula f);
  friend Formula replace(std::vector<std::size_t> map, Formula f);

 private:
  struct Node {
    Op op = Op::kTrue;
    std::string name;
    std::size_t index = 0;
    std::vector<std::size_t> map;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

Formula tt();
Formula ff();
Formula color(std::string name, std::size_t index = 0);
Formula var(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula diamond(std::string action, std::size_t index, Formula f);
Formula box(std::string action, std::size_t index, Formula f);
Formula mu(std::string var_name, Formula f);
Formula nu(std::string var_name, Formula f);
Formula replace(std::vector<std::size_t> map, Formula f);

/// Conjunction / disjunction of a list, left-nested; tt / ff when empty.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);
/// (a & b) | (~a & ~b).
Formula iff(Formula a, Formula b);
/// ~a | b.
Formula implies(Formula a, Formula b);

bool is_fixpoint(Op op) noexcept;
bool is_modal(Op op) noexcept;

/// Number of AST nodes.
std::size_t formula_size(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
bool is_closed(const Formula& f);

/// Checks the well-formedness invariants against `sig` at `arity`: indices
/// and replacement maps in range, names known, each variable bound at most
/// once, bound variables only under an even number of negations within
/// their binder. Throws InputError describing the first violation.
void validate(const Formula& f, const Signature& sig, std::size_t arity);

/// Renames bound variables so that every binder uses a distinct name
/// (name, name_1, name_2, ...). Free variables are left alone.
Formula rename_apart(const Formula& f);

}  // namespace polymu
