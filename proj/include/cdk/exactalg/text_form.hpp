#pragma once

#include <string>
#include <string_view>

#include "cdk/exactalg/rational_section.hpp"

namespace cdk {

// Canonical text form of a section, used inside JSON reports:
//
//   N=<arity>; <numerator>; <denominator>
//
// numerator   := "0" | term (" + " term)*      terms sorted by (x exponents, c power)
// term        := <p/q> "*c^" <k> "*x^[" e1 "," ... "," eN "]"
// denominator := "1" | factor ("*" factor)*    factors sorted by pair
// factor      := "(x" i "-x" j ")^" d          1-based, i < j, d > 0
//
// Example: "N=2; 1/1*c^0*x^[1,0] + -1/1*c^1*x^[0,1]; (x1-x2)^2"

std::string to_text(const RationalSection& f);
std::string to_text(const MultiPoly& f);

/// Inverse of to_text. Throws ParseError on malformed input.
RationalSection section_from_text(std::string_view text);

}  // namespace cdk
