#pragma once

#include <string_view>

#include "epdl/syntax.hpp"

namespace epdl {

/// Parses the ASCII formula grammar:
///
///   phi ::= T | F | IDENT | ~phi | K phi | Kh phi
///         | [pi] phi | <pi> phi | [[pi]] phi
///         | phi & phi | phi | phi | phi -> phi | (phi)
///   pi  ::= IDENT | ?phi | pi ; pi | pi + pi | pi* | (pi)
///
/// Unary operators bind tightest, then &, |, and right-associative ->.
/// For programs * binds tightest, then ;, then +. A test body is a unary
/// formula, so `?(p | q)` needs its parentheses.
///
/// Throws ParseError carrying the 1-based line and column of the offending
/// token.
Formula parse_formula(std::string_view text);

Program parse_program(std::string_view text);

}  // namespace epdl
