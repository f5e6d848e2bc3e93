#pragma once

#include <string>
#include <variant>

#include "hilbcenter/center.hpp"

namespace hilbcenter {

/// Result of evaluating a center expression: either an element or, when the
/// outermost operation is the scalar product bar, a rational number.
using ExprValue = std::variant<CenterElement, Rat>;

/// Evaluates the small expression language used by the `center` subcommand:
///
///   atoms       rational literals (3, -1/2) and basis vectors c[2,1],
///               s[3], h[2,2], m[] (empty brackets = empty partition)
///   products    * induction product, . convolution product
///   sums        + and -, unary minus
///   pairing     | (scalar product), lowest precedence, at most one
///
/// Mixed-basis arithmetic converts the right operand to the basis of the
/// left.  Degrees are checked where the operation requires it (convolution,
/// sums, pairing).  Throws InputError on syntax or degree errors.
ExprValue evaluate_center_expression(const CenterAlgebra& algebra,
                                     const std::string& text);

}  // namespace hilbcenter
