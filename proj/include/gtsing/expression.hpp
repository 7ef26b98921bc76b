#pragma once

#include <string>
#include <string_view>

#include "gtsing/rational_function.hpp"

namespace gtsing {

// Deterministic text form. Variables print as x[k][i], coefficients as p/q,
// terms in decreasing graded-lex order:
//
//   -x[1][1]^2+x[1][1]*x[2][1]+x[1][1]*x[2][2]-x[2][1]*x[2][2]
//   (x[2][1]-x[1][1])/(x[2][1]-x[2][2])
//
// parse_expression(to_string(f)) == f for every canonical f.

std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& f);

/// Parses +, -, *, /, integer powers (^e, ^-e), parentheses, integer
/// literals and variables x[k][i]. When n > 0, variables must satisfy
/// k <= n. Throws ParseError.
RationalFunction parse_expression(std::string_view text, int n = 0);

}  // namespace gtsing
