#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtsing {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when q = 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gtsing
