#include "gtsing/suites.hpp"

#include "gtsing/error.hpp"
#include "gtsing/expression.hpp"
#include "gtsing/sampling.hpp"

namespace gtsing {

namespace {

std::string first_difference(const RingElement& a, const RingElement& b) {
  RingElement d = a - b;
  if (d.is_zero()) return {};
  const auto& [s, f] = *d.terms().begin();
  return "difference " + to_string(f) + " at " + to_string(s);
}

SuiteReport named(std::string suite, int n) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.n = n;
  return r;
}

std::string pair_name(GeneratorId x, GeneratorId y) { return "[" + to_string(x) + "," + to_string(y) + "]"; }

void add_scaled(OrbitVector& out, const OrbitVector& v, const Rational& c) {
  for (const auto& [s, a] : v) {
    Rational& slot = out[s];
    slot += c * a;
    if (slot == 0) out.erase(s);
  }
}

}  // namespace

void SuiteReport::record(bool ok, std::string what, std::string detail) {
  ++total;
  if (ok) {
    ++passed;
  } else {
    failures.push_back({std::move(what), std::move(detail), std::nullopt});
  }
}

std::vector<BasisVec> sample_basis(const SingularContext& ctx) {
  int n = ctx.order();
  VarId a{ctx.row(), ctx.col_i()}, b{ctx.row(), ctx.col_j()};
  return {
      {DistKind::D1, Shift(n)},
      {DistKind::D1, Shift::unit(n, a) + Shift::unit(n, b)},
      {DistKind::D2, Shift::unit(n, b)},
      {DistKind::D2, Shift::unit(n, b, 2)},
  };
}

Point generic_point(int n) {
  std::vector<Rational> coords;
  for (int p = 3; coords.size() < num_vars(n); p += 2) {
    bool prime = true;
    for (int d = 3; d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (prime) coords.emplace_back(1, p);
  }
  return Point(n, std::move(coords));
}

SuiteReport run_ring_suite(int n, int triples, std::uint64_t seed) {
  SuiteReport report = named("ring", n);
  Sampler rng(seed);
  RingElement one = RingElement::unit(n);
  for (int t = 0; t < triples; ++t) {
    RingElement a = rng.ring_element(n, 3, 3), b = rng.ring_element(n, 3, 3), c = rng.ring_element(n, 3, 3);
    std::string tag = " #" + std::to_string(t);
    RingElement l = ring_mul_circ(ring_mul_circ(a, b), c), r = ring_mul_circ(a, ring_mul_circ(b, c));
    report.record(l == r, "associativity" + tag, first_difference(l, r));
    l = ring_mul_circ(a, b + c);
    r = ring_mul_circ(a, b) + ring_mul_circ(a, c);
    report.record(l == r, "left distributivity" + tag, first_difference(l, r));
    l = ring_mul_circ(a + b, c);
    r = ring_mul_circ(a, c) + ring_mul_circ(b, c);
    report.record(l == r, "right distributivity" + tag, first_difference(l, r));
    bool unit = ring_mul_circ(one, a) == a && ring_mul_circ(a, one) == a && ring_mul_star(one, a) == a && ring_mul_star(a, one) == a;
    report.record(unit, "unit" + tag);
  }
  return report;
}

SuiteReport run_homomorphism_suite(int n, Convention conv) {
  SuiteReport report = named("homomorphism", n);
  for (const auto& check : verify_homomorphism(n, conv).checks) {
    std::string detail;
    if (!check.passed) detail = "difference " + check.difference + " at " + to_string(*check.bad_shift);
    report.record(check.passed, pair_name(check.x, check.y), std::move(detail));
  }
  return report;
}

SuiteReport run_singularity_suite(const SingularContext& ctx, int products, std::uint64_t seed) {
  int n = ctx.order();
  SuiteReport report = named("singularity", n);

  Shift s = Shift::unit(n, {ctx.row(), ctx.col_i()});
  Shift ts = tau_of_shift(ctx, s);
  RationalFunction z(ctx.z1());
  RationalFunction inv = RationalFunction(1) / z;
  RingElement a = RingElement::term(inv, s) - RingElement::term(inv, ts);
  RingElement expected(n);
  expected.add_term(s + s, RationalFunction(1) / (z * (z - 1)));
  expected.add_term(s + ts, RationalFunction(-2) / (z * z - 1));
  expected.add_term(ts + ts, RationalFunction(1) / (z * (z + 1)));
  RingElement square = ring_mul_circ(a, a);
  report.record(square == expected, "closed form A o A", first_difference(square, expected));

  Sampler rng(seed);
  for (int t = 0; t < products; ++t) {
    RingElement p = rng.dv_product(ctx, 4);
    bool inv_ok = is_tau_invariant(ctx, p), sing_ok = is_at_most_one_singular(ctx, p);
    std::string detail;
    if (!inv_ok) detail = "product is not tau-invariant";
    if (!sing_ok) detail = "product has more than a simple z1 pole at v:\n" + to_string(p);
    report.record(inv_ok && sing_ok, "product #" + std::to_string(t), std::move(detail));
  }
  return report;
}

ActionReport check_module_relation(const SingularContext& ctx, GeneratorId x, GeneratorId y, const BasisVec& b) {
  DistVector d = DistVector::basis(ctx, b);
  ActionReport r{x, y, b, {}, {}, false};
  r.lhs = act_lie(ctx, x, act_lie(ctx, y, d)) - act_lie(ctx, y, act_lie(ctx, x, d));
  for (const auto& [g, c] : structure_bracket(x, y)) r.rhs += Rational(c) * act_lie(ctx, g, d);
  r.equal = r.lhs == r.rhs;
  return r;
}

SuiteReport run_module_suite(const SingularContext& ctx) {
  SuiteReport report = named("module", ctx.order());
  auto gens = adjacent_generators(ctx.order());
  for (const BasisVec& b : sample_basis(ctx)) {
    for (GeneratorId x : gens) {
      for (GeneratorId y : gens) {
        ActionReport r = check_module_relation(ctx, x, y, b);
        report.record(r.equal, pair_name(x, y) + " on " + to_string(b));
        if (!r.equal) report.failures.back().action = std::move(r);
      }
    }
  }
  return report;
}

SuiteReport run_appendix_suite(const SingularContext& ctx) {
  SuiteReport report = named("appendix", ctx.order());
  for (const BasisVec& b : sample_basis(ctx)) {
    DistVector d = DistVector::basis(ctx, b);
    DerivTabVec e = basis_correspondence(ctx, d);
    for (GeneratorId g : all_generators(ctx.order())) {
      DerivTabVec lhs = basis_correspondence(ctx, act_lie(ctx, g, d));
      DerivTabVec rhs = appendix_act(ctx, g, e);
      std::string detail;
      if (lhs != rhs) detail = "via module:\n" + to_string(lhs) + "\nvia tableaux:\n" + to_string(rhs);
      report.record(lhs == rhs, to_string(g) + " on " + to_string(b), std::move(detail));
    }
  }
  return report;
}

SuiteReport run_generic_suite(const Point& x, int orbit_points) {
  int n = x.order();
  SuiteReport report = named("generic", n);
  std::vector<Shift> points{Shift(n)};
  for (std::size_t i = 0; points.size() < static_cast<std::size_t>(orbit_points) && i < num_shift_positions(n); ++i) {
    points.push_back(Shift::unit(n, var_at(i)));
    if (points.size() < static_cast<std::size_t>(orbit_points)) points.push_back(Shift::unit(n, var_at(i), -1));
  }
  auto gens = all_generators(n);
  for (const Shift& y : points) {
    OrbitVector start{{y, Rational(1)}};
    for (GeneratorId a : gens) {
      OrbitVector ay = generic_act(x, a, start);
      for (GeneratorId b : gens) {
        OrbitVector lhs = generic_act(x, a, generic_act(x, b, start));
        add_scaled(lhs, generic_act(x, b, ay), -1);
        OrbitVector rhs;
        for (const auto& [g, c] : structure_bracket(a, b)) add_scaled(rhs, generic_act(x, g, start), c);
        report.record(lhs == rhs, pair_name(a, b) + " at " + to_string(y));
      }
    }
  }
  return report;
}

}  // namespace gtsing
