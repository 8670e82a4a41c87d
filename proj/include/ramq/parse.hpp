#pragma once

#include <string>
#include <string_view>

#include "ramq/rational.hpp"

namespace ramq {

/**
 * Parses a rational function of x. See docs/grammar.md for the grammar.
 *
 *   "1/(x^2+1)"          "x/(x^2+1)"        "1/(x^2+1)^3"
 *   "(x+1)/(x^2+4)"      "1/(x^4+1)"        "2.5*x^2/((x^2+1)^2*(x^2+9))"
 *
 * Every parenthesised or power factor of the denominator keeps its own root
 * set, so repeated factors get exact pole multiplicities. Throws ParseError
 * on malformed text; construction errors (real poles, degree gap) propagate.
 */
RationalFunction parse_rational(std::string_view text);

/// Parses a polynomial expression in x (no division).
Polynomial parse_polynomial(std::string_view text);

/// Expanded text form, highest power first, that parse_polynomial reads back.
std::string format_polynomial(const Polynomial& p);

/// "(num)/(den)" with both polynomials expanded.
std::string format_rational(const RationalFunction& f);

}  // namespace ramq
