#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polymu/formula.hpp"
#include "polymu/graph.hpp"
#include "polymu/relation.hpp"

namespace polymu {

/// Set of d-tuples over the nodes 0..n-1 of one graph, stored as a bitset
/// over n^d positions. Tuple (v_0, ..., v_{d-1}) sits at Σ v_k n^k.
class TupleSet {
 public:
  TupleSet() = default;
  TupleSet(std::size_t num_nodes, std::size_t arity, bool full = false);

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t arity() const noexcept { return d_; }
  /// n^d.
  std::size_t universe() const noexcept { return universe_; }

  std::size_t index_of(std::span<const NodeId> tuple) const;
  std::vector<NodeId> tuple_at(std::size_t index) const;

  bool test(std::size_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  void set(std::size_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  bool contains(std::span<const NodeId> tuple) const { return test(index_of(tuple)); }
  void insert(std::span<const NodeId> tuple) { set(index_of(tuple)); }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::vector<NodeId>> tuples() const;

  TupleSet& operator&=(const TupleSet& other);
  TupleSet& operator|=(const TupleSet& other);
  TupleSet complement() const;
  friend bool operator==(const TupleSet&, const TupleSet&) = default;

  /// Arity-2 sets as a node relation (component 0 = row).
  Relation to_relation() const;

 private:
  void trim();

  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Persistent variable assignment: extending returns a new environment and
/// leaves the original untouched.
class Environment {
 public:
  Environment extend(const std::string& name, TupleSet value) const;
  const TupleSet* find(const std::string& name) const;

 private:
  std::map<std::string, std::shared_ptr<const TupleSet>> vars_;
};

struct EvalOptions {
  std::size_t max_tuples = std::size_t{1} << 20;
};

struct EvalStats {
  std::size_t fixpoint_rounds = 0;
};

/// ⟦f⟧ over `g` at arity `d` under `env`. Throws InputError on unbound
/// variables or ill-formed formulas, ResourceError when |V|^d exceeds the cap.
TupleSet evaluate(const LabeledGraph& g, const Formula& f, std::size_t d, const Environment& env = {},
                  const EvalOptions& options = {}, EvalStats* stats = nullptr);

/// True iff the d-fold root tuple satisfies the closed formula `f`.
bool models(const LabeledGraph& g, const Formula& f, std::size_t d, const EvalOptions& options = {});

}  // namespace polymu
