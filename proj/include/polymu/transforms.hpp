#pragma once

#include <cstddef>

#include "polymu/formula.hpp"
#include "polymu/signature.hpp"

namespace polymu {

/// True iff `f`, read at `arity` = d+1, uses component d only to reset:
/// no color or modality mentions index d and every replacement map is the
/// identity except for a single j != d sent to d.
bool check_d_rooted(const Formula& f, std::size_t arity);

/// Monofication. Turns a d-rooted formula of arity d+1 over (Σ,Col) into an
/// arity-1 formula over the lifted signature: <a>_i becomes <a@i>, c_i
/// becomes c@i and [j<-d] becomes <rst@j>. Throws InputError if `f` is not
/// d-rooted.
Formula monofy(const Formula& f, std::size_t arity);

/// Polyfication, the inverse of monofy. `f` is an arity-1 formula over
/// lift_signature(base, d); the result has arity d+1. Both <rst@j> and
/// [rst@j] become [j<-d], since resets are functional on powers. Throws
/// InputError on names that are not of lifted form.
Formula polyfy(const Formula& f, std::size_t d);

/// The replacement map [j<-d] at arity d+1.
std::vector<std::size_t> reset_map(std::size_t j, std::size_t d);

/// Positive normal form: negations only directly above colors or free
/// variables. Bound variables keep their names.
Formula to_nnf(const Formula& f);

/// Removes every replacement operator. Only meaningful at arity 1, where
/// the single possible map is the identity.
Formula erase_replace(const Formula& f);

}  // namespace polymu
