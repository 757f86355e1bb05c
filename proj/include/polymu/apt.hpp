#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polymu/formula.hpp"
#include "polymu/graph.hpp"
#include "polymu/signature.hpp"

namespace polymu {

using StateId = std::size_t;

/// One transition formula: c | ~c | <a>q | [a]q | q | q' | q & q'.
struct Transition {
  enum class Kind { kColor, kNotColor, kDiamond, kBox, kOr, kAnd };
  Kind kind = Kind::kOr;
  std::size_t symbol = 0;  // color for literals, action for modalities
  StateId left = 0;        // target of a modality, first operand otherwise
  StateId right = 0;
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Alternating symmetric parity tree automaton.
struct Apt {
  Signature signature;
  std::vector<Transition> delta;
  std::vector<unsigned> priority;
  std::vector<std::string> label;  // human-readable origin of each state
  StateId initial = 0;

  std::size_t num_states() const noexcept { return delta.size(); }
};

/// Translates a closed arity-1 formula into an APT accepting exactly the
/// graphs that satisfy it. The formula is put into positive normal form
/// first and replacement operators are dropped. tt and ff become q_c | q_~c
/// and q_c & q_~c over the first color. Fixpoint states alias their bodies
/// via q | q, variables reuse the state of their binder. Priorities: ν even,
/// μ odd, never smaller than those of nested fixpoints, 0 elsewhere.
Apt formula_to_apt(const Formula& f, const Signature& sig);

/// Multi-line listing "q<k> [prio] := delta" with the initial state first.
std::string format_apt(const Apt& apt);

}  // namespace polymu
