#pragma once

#include <cstddef>
#include <vector>

#include "polymu/graph.hpp"
#include "polymu/relation.hpp"

namespace polymu {

/// The d x d family of relations ≈_ij on one lifted graph.
struct DBisimFamily {
  std::size_t d = 0;
  std::vector<Relation> relations;  // row-major, index i * d + j

  const Relation& at(std::size_t i, std::size_t j) const { return relations[i * d + j]; }
  Relation& at(std::size_t i, std::size_t j) { return relations[i * d + j]; }
};

/// Largest d-dimensional asynchronous bisimulation on a graph over
/// lift_signature(base, d). Each ≈_ij is an independent greatest fixpoint
/// seeded with the (Prop)-consistent pairs. Throws InputError if the
/// signature is not of lifted shape.
DBisimFamily largest_d_bisimulation(const LabeledGraph& g);

/// Prop/Forth/Back checked pairwise for every relation of `fam`.
bool is_d_bisimulation(const DBisimFamily& fam, const LabeledGraph& g);

/// Every a@i or rst@i edge v -> v' has v ≈_jj v' for all j != i.
bool is_persistent(const LabeledGraph& g, const DBisimFamily& fam);
/// Every rst@i edge lands on a node ≈_ii-related to the root.
bool has_reset_property(const LabeledGraph& g, const DBisimFamily& fam);
/// root ≈_ij root for all i, j.
bool is_power_rooted(const LabeledGraph& g, const DBisimFamily& fam);

enum class PowerMethod { kDBisim, kLogic, kBoth };

struct PowerConditions {
  bool persistent = false;
  bool reset = false;
  bool power_rooted = false;

  bool is_product() const noexcept { return persistent && reset; }
  bool is_power() const noexcept { return persistent && reset && power_rooted; }
  friend bool operator==(const PowerConditions&, const PowerConditions&) = default;
};

/// Evaluates the three power conditions on the part of `g` reachable from
/// its root. kDBisim uses the largest d-bisimulation, kLogic the dyadic
/// formulas from generators.hpp; kBoth runs both and throws
/// ConsistencyError if any condition differs.
PowerConditions power_conditions(const LabeledGraph& g, std::size_t d, PowerMethod method);

/// power_conditions(g, d, method).is_power().
bool detect_power(const LabeledGraph& g, std::size_t d, PowerMethod method);

/// The component graph G^i/d: nodes are ≈_ii classes (named by their least
/// member id), a-edges follow a@i edges, colors c where c@i holds. Throws
/// InputError unless g is persistent and has the reset property.
LabeledGraph factor(const LabeledGraph& g, std::size_t i);

/// factor(g, 0), ..., factor(g, d-1).
std::vector<LabeledGraph> factors(const LabeledGraph& g);

}  // namespace polymu
