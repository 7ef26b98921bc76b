#pragma once

#include <cstdint>
#include <random>

#include "gtsing/skew_ring.hpp"

namespace gtsing {

/// Seeded source of small random algebraic objects.
///
/// Draws use plain modular reduction of mt19937_64 output rather than the
/// standard distributions, so a seed gives the same objects with every
/// standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= 4, 1 <= q <= 3, nonzero.
  Rational small_rational();

  /// Up to `max_terms` terms of total degree <= max_degree over all
  /// n(n+1)/2 coordinates.
  Polynomial polynomial(int n, int max_degree, int max_terms);

  /// num of degree <= max_degree over a product of at most two factors
  /// X(a) - X(b) + c or X(a) + c, or over 1.
  RationalFunction rational_function(int n, int max_degree);

  /// Components in [-radius, radius].
  Shift shift(int n, int radius);

  RingElement ring_element(int n, int max_support, int max_degree);

  /// P + tau(P) for a random P.
  Polynomial tau_invariant_polynomial(const SingularContext& ctx, int max_degree, int max_terms);

  /// A tau-invariant element of D_v in generator form: a phi image of an
  /// adjacent generator, H/z1 (s - tau s) style pairs, or polynomial pairs
  /// f s + tau(f) tau(s).
  RingElement dv_generator(const SingularContext& ctx);

  /// Product of 1..max_length dv_generators under the calibrated multiplication.
  RingElement dv_product(const SingularContext& ctx, int max_length);

 private:
  std::mt19937_64 rng_;
};

}  // namespace gtsing
