#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "polymu/formula.hpp"
#include "polymu/graph.hpp"
#include "polymu/signature.hpp"

namespace polymu {

/// std::mt19937_64 with a fixed mapping to bounded integers (rejection
/// sampling on the raw 64-bit output), so sequences do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::size_t below(std::size_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability num / den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Nodes "0".."n-1" with n in [1, max_nodes]; each color with probability
/// 1/2; each possible edge with probability edge_num / (edge_den * n).
LabeledGraph random_graph(Rng& rng, const Signature& sig, std::size_t max_nodes, std::size_t edge_num = 3,
                          std::size_t edge_den = 2);

/// A bisimilar graph obtained by repeatedly duplicating a node (same colors
/// and successors) and redirecting some of its incoming edges to the copy.
LabeledGraph split_nodes(Rng& rng, const LabeledGraph& g, std::size_t splits);

/// Adds or removes one random edge, or flips one color.
LabeledGraph perturb(Rng& rng, const LabeledGraph& g);

struct FormulaShape {
  std::size_t arity = 1;
  std::size_t size = 8;       // exact AST size
  bool d_rooted = false;      // arity = d + 1; index d only through [j<-d]
  bool reset_boxes = true;    // allow [rst@j] at arity 1
  bool fixpoints = true;
};

/// Random closed, well-formed formula of exactly `shape.size` nodes. Bound
/// variables are used only under an even number of negations below their
/// binder and every binder has a distinct name.
Formula random_formula(Rng& rng, const Signature& sig, const FormulaShape& shape);

/// Random tree with a root path of exactly `spine` nodes and random side
/// branches of at most `branch_depth` levels.
FiniteTree random_spine_tree(Rng& rng, const Signature& sig, std::size_t spine, std::size_t branch_depth);

}  // namespace polymu
