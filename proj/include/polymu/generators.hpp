#pragma once

#include <cstddef>

#include "polymu/formula.hpp"
#include "polymu/signature.hpp"

namespace polymu {

// Arity-2 formulas over lift_signature(base, d) that characterise
// d-bisimilarity and the product/power conditions.

/// νX.(⋀_c (c@i)@0 <-> (c@j)@1) & ⋀_a ([a@i]@0 <a@j>@1 X & [a@j]@1 <a@i>@0 X)
Formula gen_bisim_formula(std::size_t i, std::size_t j, const Signature& base, std::size_t d);

enum class AllboxScope {
  kBaseActions,  // only a@j moves: the formula exactly as usually displayed
  kAllActions,   // a@j and rst@j moves: every node reachable from the root
};

/// νY. φ & ⋀_a ⋀_j [a@j]@i Y (plus [rst@j]@i Y for kAllActions).
Formula gen_allbox(std::size_t i, const Formula& f, const Signature& base, std::size_t d,
                   AllboxScope scope = AllboxScope::kBaseActions);

/// Persistence: in every reachable pair, a move of candidate component i in
/// position 0 keeps ≈_jj for all j != i. tt when d = 1.
Formula gen_per(std::size_t d, const Signature& base, AllboxScope scope = AllboxScope::kAllActions);
/// Reset property: from every reachable node, rst@i leads to a node ≈_ii the root.
Formula gen_rst(std::size_t d, const Signature& base, AllboxScope scope = AllboxScope::kAllActions);
/// ⋀_{i,j} bis^{ij}.
Formula gen_pow(std::size_t d, const Signature& base);

}  // namespace polymu
