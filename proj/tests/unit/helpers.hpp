#pragma once

#include <doctest.h>

#include <string>

#include "gtsing/expression.hpp"
#include "gtsing/sampling.hpp"
#include "gtsing/singular_module.hpp"

namespace gtsing::testing {

inline RationalFunction rf(const std::string& text) { return parse_expression(text); }
inline Polynomial poly(const std::string& text) {
  RationalFunction f = parse_expression(text);
  REQUIRE(f.is_polynomial());
  return f.num() * (1 / f.den().constant_value());
}
inline Rational q(const std::string& text) { return parse_rational(text); }

/// The canonical n=3 context with singular pair (2,1,2).
inline SingularContext ctx3() { return SingularContext(canonical_point(3, 2, 1, 2), 2, 1, 2); }

inline Shift sh(int n, const std::string& spec) { return parse_shift_spec(spec, n); }

/// Random rational point with small denominators, for evaluation oracles.
inline Point random_point(Sampler& rng, int n) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < num_vars(n); ++i) {
    Rational r(rng.uniform(-40, 40), rng.uniform(7, 29));
    r.canonicalize();
    c.push_back(r);
  }
  return Point(n, std::move(c));
}

}  // namespace gtsing::testing
