#pragma once

#include "biharm/ratfn.hpp"

#include <string_view>

namespace biharm {

/// Parses the expression grammar: variables z11..znn (or z_{ij}, z_{i,j}),
/// p1.., q1.., x0.., s t a b u v, the imaginary unit i, integers, operators
/// + - * / ^ with integer exponents, and parentheses. `/` yields an
/// unreduced quotient; constant denominators are folded into coefficients.
/// Throws ParseError carrying the byte offset of the problem.
RatFn parse_expr(std::string_view text);

/// parse_expr restricted to polynomials.
Poly parse_poly(std::string_view text);

} // namespace biharm
