#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "polymu/formula.hpp"
#include "polymu/signature.hpp"

namespace polymu {

/// Parses the textual syntax
///
///   form := tt | ff | color@n | VAR | ~form | form & form | form | form
///         | <action@n> form | [action@n] form
///         | mu VAR. form | nu VAR. form | %{n,...,n} form | (form)
///
/// Prefix operators bind tightest, then &, then |; binary operators
/// associate to the left and fixpoint bodies extend as far right as
/// possible. At arity 1 the "@0" suffix may be left out, and a name that
/// the signature knows verbatim (such as the lifted action "a@0") is taken
/// as is. The result is validated against `sig`.
Formula parse_formula(std::string_view text, const Signature& sig, std::size_t arity);

/// Inverse of parse_formula with the fewest parentheses that still parse
/// back to the same tree. With arity 1 the "@0" suffixes are omitted;
/// arity 0 means "always print the index".
std::string print_formula(const Formula& f, std::size_t arity = 0);

}  // namespace polymu
