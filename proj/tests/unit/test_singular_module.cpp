#include "helpers.hpp"

#include "gtsing/error.hpp"
#include "gtsing/suites.hpp"

using namespace gtsing;
using namespace gtsing::testing;

namespace {

BasisVec bv(const std::string& spec) { return parse_basis_spec(spec, 3); }

DistVector basis(const SingularContext& ctx, const std::string& spec) { return DistVector::basis(ctx, bv(spec)); }

DistVector single(const SingularContext& ctx, const std::string& spec, const Rational& c) { return c * basis(ctx, spec); }

}  // namespace

TEST_CASE("basis spec parsing and validation") {
  SingularContext ctx = ctx3();
  CHECK(to_string(bv("D2:(2,2)+1")) == "D2:(2,2)+1");
  CHECK(to_string(bv("D1:id")) == "D1:id");
  CHECK_THROWS_AS(bv("D3:id"), ParseError);
  CHECK_THROWS_AS(bv("D1"), ParseError);
  CHECK_THROWS_AS(bv("D1:(2,1)"), ParseError);
  CHECK_THROWS_AS(validate_basis(ctx, bv("D2:(2,1)+1")), DomainError);
  CHECK_THROWS_AS(validate_basis(ctx, bv("D2:id")), DomainError);
  CHECK_THROWS_AS(validate_basis(ctx, bv("D2:(2,1)+1,(2,2)+1")), DomainError);
  CHECK_NOTHROW(validate_basis(ctx, bv("D1:(2,1)+1,(2,2)+1")));
  CHECK_NOTHROW(validate_basis(ctx, bv("D2:(1,1)-1,(2,2)+2")));
}

TEST_CASE("relations of the distribution basis") {
  SingularContext ctx = ctx3();
  DistVector d;
  d.add(ctx, DistKind::D1, sh(3, "(2,1)+2"), 1);
  CHECK(d == basis(ctx, "D1:(2,2)+2"));
  DistVector e;
  e.add(ctx, DistKind::D2, sh(3, "(2,1)+1"), 3);
  CHECK(e == single(ctx, "D2:(2,2)+1", -3));
  DistVector z;
  CHECK_THROWS_AS(z.add(ctx, DistKind::D2, sh(3, "(1,1)+1"), 1), InvariantError);
  CHECK_NOTHROW(z.add(ctx, DistKind::D2, sh(3, "(1,1)+1"), 0));

  Sampler rng(67);
  for (int t = 0; t < 40; ++t) {
    DistVector v;
    for (int k = 0; k < 4; ++k) {
      Shift s = rng.shift(3, 2);
      DistKind kind = rng.coin() && tau_of_shift(ctx, s) != s ? DistKind::D2 : DistKind::D1;
      v.add(ctx, kind, s, rng.small_rational());
    }
    CHECK(canonicalize(ctx, v) == v);
    CHECK(canonicalize(ctx, canonicalize(ctx, v)) == v);
    for (const auto& [b, c] : v.coeffs()) CHECK(in_delta(ctx, b.sigma));
  }
}

TEST_CASE("evaluate_at_v examples") {
  SingularContext ctx = ctx3();
  Shift sp = sh(3, "(2,2)+1"), tsp = tau_of_shift(ctx, sp);
  RationalFunction c = RationalFunction(1) / RationalFunction(Rational(2) * ctx.z1());
  CHECK(evaluate_at_v(ctx, RingElement::term(c, sp) - RingElement::term(c, tsp)) == basis(ctx, "D2:(2,2)+1"));

  Shift s = sh(3, "(1,1)+1,(2,2)+2");
  RingElement half = RingElement::term(Rational(1, 2), s) + RingElement::term(Rational(1, 2), tau_of_shift(ctx, s));
  CHECK(evaluate_at_v(ctx, half) == basis(ctx, "D1:(1,1)+1,(2,2)+2"));

  CHECK(evaluate_at_v(ctx, phi_diagonal(3, 1)) == single(ctx, "D1:id", Rational(1, 3)));

  for (const BasisVec& b : sample_basis(ctx)) CHECK(evaluate_at_v(ctx, basis_element(ctx, b)) == DistVector::basis(ctx, b));

  CHECK_THROWS_AS(evaluate_at_v(ctx, RingElement::term(1, sp)), MembershipError);
  RationalFunction z(ctx.z1());
  CHECK_THROWS_AS(evaluate_at_v(ctx, RingElement::term(RationalFunction(1) / (z * z), Shift(3))), MembershipError);
}

TEST_CASE("act") {
  SingularContext ctx = ctx3();
  RingElement one = RingElement::unit(3);
  for (const BasisVec& b : sample_basis(ctx)) CHECK(act(ctx, one, b) == DistVector::basis(ctx, b));
  CHECK(act(ctx, phi_diagonal(3, 1), bv("D1:id")) == single(ctx, "D1:id", Rational(1, 3)));
  CHECK(act_lie(ctx, {1, 1}, bv("D1:id")) == single(ctx, "D1:id", Rational(1, 3)));

  for (const BasisVec& b : sample_basis(ctx)) {
    for (GeneratorId g : all_generators(3)) CHECK(act_lie(ctx, g, b).coeffs().size() <= 8);
    for (int k = 1; k <= 3; ++k) {
      DistVector d = act_lie(ctx, {k, k}, b);
      for (const auto& [out, c] : d.coeffs()) {
        CHECK(out.sigma == b.sigma);
        if (b.kind == DistKind::D1) CHECK(out.kind == DistKind::D1);
      }
    }
  }
}

TEST_CASE("module action respects products in the ring") {
  // act(A, act(B, D)) = act(A * B, D) with the calibrated multiplication.
  SingularContext ctx = ctx3();
  Sampler rng(71);
  for (int t = 0; t < 20; ++t) {
    RingElement a = rng.dv_generator(ctx), b = rng.dv_generator(ctx);
    for (const BasisVec& d : sample_basis(ctx)) {
      DistVector step = act(ctx, a, act(ctx, b, DistVector::basis(ctx, d)));
      CHECK(step == act(ctx, multiply(calibrated_convention(), a, b), d));
    }
  }
}

TEST_CASE("apply_dist examples and separating matrix") {
  SingularContext ctx = ctx3();
  Polynomial z1 = ctx.z1();
  Polynomial f = Polynomial(Rational(5, 7)) + Rational(3) * z1 * z1;
  CHECK(apply_basis_functional(ctx, DistKind::D1, Shift(3), f) == Rational(5, 7));
  CHECK(apply_basis_functional(ctx, DistKind::D2, sh(3, "(2,1)+1"), z1 * z1) == -2);
  CHECK_THROWS_AS(apply_basis_functional(ctx, DistKind::D1, Shift(3), z1), DomainError);
  CHECK_THROWS_AS(apply_basis_functional(ctx, DistKind::D2, Shift(3), z1 * z1), DomainError);

  Sampler rng(73);
  for (int t = 0; t < 60; ++t) {
    Shift s = rng.shift(3, 2);
    CHECK(apply_basis_functional(ctx, DistKind::D1, s, Polynomial(1)) == 1);
    int d = s.at(ctx.index_i()) - s.at(ctx.index_j());
    CHECK(apply_basis_functional(ctx, DistKind::D1, s, z1 * z1) == d * d);
    if (d == 0) continue;
    CHECK(apply_basis_functional(ctx, DistKind::D2, s, Polynomial(1)) == 0);
    CHECK(apply_basis_functional(ctx, DistKind::D2, s, z1 * z1) == -2 * d);
  }
}

TEST_CASE("relations hold as functionals") {
  SingularContext ctx = ctx3();
  Sampler rng(79);
  for (int t = 0; t < 40; ++t) {
    Shift s = rng.shift(3, 2), ts = tau_of_shift(ctx, s);
    Polynomial f = rng.tau_invariant_polynomial(ctx, 4, 4);
    CHECK(apply_basis_functional(ctx, DistKind::D1, ts, f) == apply_basis_functional(ctx, DistKind::D1, s, f));
    if (s == ts) continue;
    CHECK(apply_basis_functional(ctx, DistKind::D2, ts, f) == -apply_basis_functional(ctx, DistKind::D2, s, f));
  }
}

TEST_CASE("evaluation formula agrees with the ring action on functions") {
  SingularContext ctx = ctx3();
  Sampler rng(83);
  for (int t = 0; t < 40; ++t) {
    RingElement a = rng.dv_product(ctx, 3);
    Polynomial f = rng.tau_invariant_polynomial(ctx, 4, 4);
    RationalFunction af = apply_to_function(a, RationalFunction(f));
    CHECK(apply_dist(ctx, evaluate_at_v(ctx, a), f) == eval(af, ctx.point()));
  }
}

TEST_CASE("module relations on the sample basis") {
  SuiteReport r = run_module_suite(ctx3());
  CHECK(r.total == 196);
  CHECK(r.ok());
  ActionReport one = check_module_relation(ctx3(), {1, 2}, {2, 1}, sample_basis(ctx3())[2]);
  CHECK(one.equal);
  CHECK_FALSE(one.lhs.is_zero());
}

TEST_CASE("module relations at an n = 4 context") {
  SingularContext ctx(canonical_point(4, 3, 1, 3), 3, 1, 3);
  auto gens = adjacent_generators(4);
  BasisVec b{DistKind::D2, Shift::unit(4, {3, 3})};
  for (GeneratorId x : gens)
    for (GeneratorId y : {GeneratorId{3, 4}, GeneratorId{4, 3}, GeneratorId{2, 3}})
      CHECK(check_module_relation(ctx, x, y, b).equal);
}

TEST_CASE("appendix action") {
  SingularContext ctx = ctx3();
  DerivTabVec t;
  t.add(ctx, TabKind::T, Shift(3), 1);
  DerivTabVec expect;
  expect.add(ctx, TabKind::T, Shift(3), Rational(1, 3));
  CHECK(appendix_act(ctx, {1, 1}, t) == expect);

  DerivTabVec zero;
  Shift sp = sh(3, "(2,1)+1");
  zero.add(ctx, TabKind::DT, sp, 1);
  zero.add(ctx, TabKind::DT, tau_of_shift(ctx, sp), 1);
  CHECK(zero.is_zero());
  for (GeneratorId g : all_generators(3)) CHECK(appendix_act(ctx, g, zero).is_zero());

  SuiteReport r = run_appendix_suite(ctx);
  CHECK(r.total == 36);
  CHECK(r.ok());
}

TEST_CASE("basis correspondence") {
  SingularContext ctx = ctx3();
  Shift fixed = sh(3, "(1,1)+1,(2,1)+1,(2,2)+1");
  DerivTabVec t;
  t.add(ctx, TabKind::T, -fixed, 1);
  CHECK(basis_correspondence(ctx, DistVector::basis(ctx, {DistKind::D1, fixed})) == t);

  Sampler rng(89);
  for (int i = 0; i < 40; ++i) {
    DistVector v;
    for (int k = 0; k < 4; ++k) {
      Shift s = rng.shift(3, 2);
      v.add(ctx, tau_of_shift(ctx, s) != s && rng.coin() ? DistKind::D2 : DistKind::D1, s, rng.small_rational());
    }
    CHECK(basis_correspondence_inverse(ctx, basis_correspondence(ctx, v)) == v);
  }
}

TEST_CASE("labelling distributions by sigma(v) instead of sigma^-1(v) breaks the intertwining") {
  SingularContext ctx = ctx3();
  auto literal = [&](const DistVector& d) {
    DerivTabVec out;
    for (const auto& [b, c] : d.coeffs()) out.add(ctx, b.kind == DistKind::D1 ? TabKind::T : TabKind::DT, b.sigma, c);
    return out;
  };
  int broken = 0;
  for (const BasisVec& b : sample_basis(ctx)) {
    DistVector d = DistVector::basis(ctx, b);
    for (GeneratorId g : all_generators(3))
      if (literal(act_lie(ctx, g, d)) != appendix_act(ctx, g, literal(d))) ++broken;
  }
  CHECK(broken > 0);
}

TEST_CASE("generic action") {
  Point x = generic_point(2);
  Shift y = Shift::unit(2, {1, 1}, 2);
  Point yx = apply_shift(y, x);
  OrbitVector e12 = generic_act(x, {1, 2}, y);
  Rational x11 = yx[VarId{1, 1}], x21 = yx[VarId{2, 1}], x22 = yx[VarId{2, 2}];
  CHECK(e12 == OrbitVector{{y + Shift::unit(2, {1, 1}), -(x11 - x21) * (x11 - x22)}});
  OrbitVector e22 = generic_act(x, {2, 2}, y);
  CHECK(e22 == OrbitVector{{y, x21 + x22 + 1 - x11}});
  CHECK_THROWS_AS(generic_act(canonical_point(3, 2, 1, 2), {1, 2}, Shift(3)), DomainError);

  SuiteReport r = run_generic_suite(generic_point(3));
  CHECK(r.total == 405);
  CHECK(r.ok());
}
