#include "gtsing/sampling.hpp"

#include "gtsing/gt_formulas.hpp"

namespace gtsing {

int Sampler::uniform(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::small_rational() {
  int p = uniform(1, 4) * (coin() ? 1 : -1);
  Rational q(p, uniform(1, 3));
  q.canonicalize();
  return q;
}

Polynomial Sampler::polynomial(int n, int max_degree, int max_terms) {
  auto vars = static_cast<int>(num_vars(n));
  Polynomial p;
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int degree = uniform(0, max_degree);
    for (int d = 0; d < degree; ++d) m = m * Monomial::var(static_cast<std::size_t>(uniform(0, vars - 1)));
    p += Polynomial::monomial(m, small_rational());
  }
  return p;
}

RationalFunction Sampler::rational_function(int n, int max_degree) {
  Polynomial num = polynomial(n, max_degree, 3);
  if (num.is_zero()) num = Polynomial(small_rational());
  auto vars = static_cast<int>(num_vars(n));
  Polynomial den(1);
  int factors = uniform(0, 2);
  for (int f = 0; f < factors; ++f) {
    Polynomial lin = Polynomial::variable(var_at(static_cast<std::size_t>(uniform(0, vars - 1))));
    if (coin()) {
      Polynomial other = Polynomial::variable(var_at(static_cast<std::size_t>(uniform(0, vars - 1))));
      if (other != lin) lin -= other;
    }
    den = den * (lin + Polynomial(Rational(uniform(-2, 2))));
  }
  return RationalFunction(num, den);
}

Shift Sampler::shift(int n, int radius) {
  std::vector<int> m(num_shift_positions(n));
  for (int& c : m) c = uniform(-radius, radius);
  return Shift(n, std::move(m));
}

RingElement Sampler::ring_element(int n, int max_support, int max_degree) {
  RingElement a(n);
  int support = uniform(1, max_support);
  for (int t = 0; t < support; ++t) a.add_term(shift(n, 1), rational_function(n, max_degree));
  return a;
}

Polynomial Sampler::tau_invariant_polynomial(const SingularContext& ctx, int max_degree, int max_terms) {
  Polynomial p = polynomial(ctx.order(), max_degree, max_terms);
  return p + tau_of_function(ctx, p);
}

RingElement Sampler::dv_generator(const SingularContext& ctx) {
  int n = ctx.order();
  switch (uniform(0, 2)) {
    case 0: {
      auto gens = adjacent_generators(n);
      return phi_general(n, gens[static_cast<std::size_t>(uniform(0, static_cast<int>(gens.size()) - 1))]);
    }
    case 1: {
      // (H/z1) s + tau(H/z1) tau(s)
      Polynomial h = polynomial(n, 2, 2) + Polynomial(small_rational());
      RationalFunction c = RationalFunction(h, ctx.z1());
      Shift s = shift(n, 1);
      RingElement a(n);
      a.add_term(s, c);
      a.add_term(tau_of_shift(ctx, s), tau_of_function(ctx, c));
      return a;
    }
    default: {
      Polynomial f = polynomial(n, 2, 2);
      Shift s = shift(n, 1);
      RingElement a(n);
      a.add_term(s, RationalFunction(f));
      a.add_term(tau_of_shift(ctx, s), RationalFunction(tau_of_function(ctx, f)));
      return a;
    }
  }
}

RingElement Sampler::dv_product(const SingularContext& ctx, int max_length) {
  RingElement a = dv_generator(ctx);
  int length = uniform(1, max_length);
  for (int l = 1; l < length; ++l) a = multiply(calibrated_convention(), a, dv_generator(ctx));
  return a;
}

}  // namespace gtsing
