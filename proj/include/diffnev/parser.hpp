#pragma once

#include <string>

#include "diffnev/wpoly.hpp"

namespace diffnev {

// Canonical expression grammar: integer literals, `z`, `w`, `+ - * / ^`,
// parentheses. Printing through to_string() is parse-stable.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := primary ['^' ['-'] integer]
//   primary:= integer | 'z' | 'w' | '(' expr ')'
WRat parse_wrat(const std::string& text);

// Same grammar restricted to w-degree 0; throws ParseError if `w` appears.
RatFunc parse_ratfunc(const std::string& text);

// Same grammar restricted to a polynomial in w (constant denominator).
WPoly parse_wpoly(const std::string& text);

}  // namespace diffnev
