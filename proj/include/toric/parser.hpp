/// @file parser.hpp
/// @brief Text form of polynomials: `2*s^2*t - 1/3*(s + t)^4`.

#pragma once

#include <string>

#include "toric/multipoly.hpp"

namespace toric {

struct SyntaxError : UsageError {
    explicit SyntaxError(const std::string& what) : UsageError(what) {}
};

/// Parses a polynomial over the given roster.
///
/// Grammar (whitespace insignificant):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ['-'] atom ('^' nat)?
///   atom   := nat ('/' nat)? | variable | '(' expr ')'
///
/// '^' binds tighter than '*', and a unary minus applies to the whole power
/// factor, so -x^2 reads as -(x^2).  Multiplication is always explicit.
/// Unknown variables and malformed input raise SyntaxError with a 1-based
/// character position.
MultiPoly parse_poly(const std::string& text, const RosterPtr& roster);

}  // namespace toric
