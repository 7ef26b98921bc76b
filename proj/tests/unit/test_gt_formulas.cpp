#include "helpers.hpp"

#include "gtsing/classical.hpp"
#include "gtsing/error.hpp"
#include "gtsing/suites.hpp"

using namespace gtsing;
using namespace gtsing::testing;

namespace {

RingElement term(const std::string& coeff, const Shift& s) { return RingElement::term(rf(coeff), s); }

LieElement bracket_of(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      for (const auto& [z, cz] : structure_bracket(x, y)) out[z] += cx * cy * cz;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("phi_raising") {
  CHECK(phi_raising(2, 1) == term("-(x[1][1] - x[2][1])*(x[1][1] - x[2][2])", Shift::unit(2, {1, 1}, -1)));
  RingElement expected = term("-(x[2][1] - x[3][1])*(x[2][1] - x[3][2])*(x[2][1] - x[3][3])/(x[2][1] - x[2][2])", Shift::unit(3, {2, 1}, -1)) +
                         term("-(x[2][2] - x[3][1])*(x[2][2] - x[3][2])*(x[2][2] - x[3][3])/(x[2][2] - x[2][1])", Shift::unit(3, {2, 2}, -1));
  CHECK(phi_raising(3, 2) == expected);
  CHECK_THROWS_AS(phi_raising(3, 3), DomainError);
  CHECK_THROWS_AS(phi_raising(3, 0), DomainError);
}

TEST_CASE("phi_lowering") {
  CHECK(phi_lowering(2, 1) == RingElement::term(1, Shift::unit(2, {1, 1})));
  RingElement expected = term("(x[2][1] - x[1][1])/(x[2][1] - x[2][2])", Shift::unit(3, {2, 1})) +
                         term("(x[2][2] - x[1][1])/(x[2][2] - x[2][1])", Shift::unit(3, {2, 2}));
  CHECK(phi_lowering(3, 2) == expected);
  CHECK(group_act_on_ring(ctx3(), phi_lowering(3, 2)) == phi_lowering(3, 2));
}

TEST_CASE("phi_diagonal") {
  CHECK(phi_diagonal(3, 1) == term("x[1][1]", Shift(3)));
  CHECK(phi_diagonal(3, 2) == term("x[2][1] + x[2][2] + 1 - x[1][1]", Shift(3)));
  CHECK(phi_diagonal(3, 3) == term("x[3][1] + x[3][2] + x[3][3] + 3 - x[2][1] - x[2][2] - 1", Shift(3)));
  CHECK_THROWS_AS(phi_diagonal(3, 4), DomainError);
}

TEST_CASE("phi_general") {
  CHECK(phi_general(3, {1, 2}) == phi_raising(3, 1));
  CHECK(phi_general(3, {2, 1}) == phi_lowering(3, 1));
  CHECK(phi_general(3, {2, 2}) == phi_diagonal(3, 2));
  CHECK(phi_general(3, {1, 3}) == commutator(calibrated_convention(), phi_general(3, {1, 2}), phi_general(3, {2, 3})));
  CHECK(phi_general(3, {3, 1}) == commutator(calibrated_convention(), phi_general(3, {3, 2}), phi_general(3, {2, 1})));
  CHECK_THROWS_AS(phi_general(3, {0, 2}), DomainError);
  CHECK_THROWS_AS(phi_general(3, {1, 4}), DomainError);
}

TEST_CASE("calibration") {
  // By hand: the o-commutator of phi(E12) and phi(E21) at n = 2 is -phi(E11 - E22).
  RingElement h = phi_diagonal(2, 1) - phi_diagonal(2, 2);
  CHECK(commutator(Convention::circ, phi_raising(2, 1), phi_lowering(2, 1)) == -h);
  CHECK(commutator(Convention::star, phi_raising(2, 1), phi_lowering(2, 1)) == h);
  CHECK(calibrate_convention(2) == Convention::star);
  CHECK(calibrated_convention() == Convention::star);
  CHECK(calibrate_convention(3) == Convention::star);
  for (Convention c : {Convention::circ, Convention::star}) CHECK(commutator(c, phi_diagonal(3, 1), phi_diagonal(3, 2)).is_zero());
}

TEST_CASE("structure table") {
  auto gens = all_generators(3);
  for (GeneratorId a : gens)
    for (GeneratorId b : gens) {
      LieElement ab = structure_bracket(a, b), ba = structure_bracket(b, a);
      for (auto& [g, c] : ba) c = -c;
      CHECK(ab == ba);
    }
  Sampler rng(59);
  for (int t = 0; t < 100; ++t) {
    auto pick = [&] { return LieElement{{gens[static_cast<std::size_t>(rng.uniform(0, 8))], 1}}; };
    LieElement x = pick(), y = pick(), z = pick();
    LieElement sum;
    for (const LieElement& part : {bracket_of(x, bracket_of(y, z)), bracket_of(y, bracket_of(z, x)), bracket_of(z, bracket_of(x, y))})
      for (const auto& [g, c] : part) sum[g] += c;
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    CHECK(sum.empty());
  }
}

TEST_CASE("homomorphism at n = 2 and n = 3") {
  HomomorphismReport r2 = verify_homomorphism(2);
  CHECK(r2.checks.size() == 16);
  CHECK(r2.passed());
  HomomorphismReport r3 = verify_homomorphism(3);
  CHECK(r3.checks.size() == 81);
  CHECK(r3.passed());
  HomomorphismReport wrong = verify_homomorphism(2, Convention::circ);
  CHECK_FALSE(wrong.passed());
  for (const auto& c : wrong.checks)
    if (!c.passed) CHECK(c.bad_shift.has_value());
}

TEST_CASE("commutators are antisymmetric") {
  Convention conv = calibrated_convention();
  for (GeneratorId a : all_generators(3))
    for (GeneratorId b : all_generators(3))
      CHECK(commutator(conv, phi_general(3, a), phi_general(3, b)) == -commutator(conv, phi_general(3, b), phi_general(3, a)));
}

TEST_CASE("ring images agree with the classical formulas at generic points") {
  Sampler rng(61);
  for (int n : {2, 3, 4}) {
    Point x = generic_point(n);
    for (GeneratorId g : adjacent_generators(n)) {
      RingElement img = phi_general(n, g);
      auto terms = classical_terms(n, g);
      for (int t = 0; t < 3; ++t) {
        RationalFunction f(rng.polynomial(n, 3, 3));
        Rational via_ring = 0, via_classical = 0;
        for (const auto& [s, h] : img.terms()) via_ring += eval(h, x) * eval(f, apply_shift(-s, x));
        for (const auto& term : terms) via_classical += eval(term.coeff, x) * eval(f, apply_shift(term.offset, x));
        CHECK(via_ring == via_classical);
      }
    }
  }
}

TEST_CASE("phi images lie in D_v at every n = 4 context") {
  for (auto [k, i, j] : {std::array{2, 1, 2}, std::array{3, 1, 2}, std::array{3, 1, 3}, std::array{3, 2, 3}}) {
    SingularContext ctx(canonical_point(4, k, i, j), k, i, j);
    for (GeneratorId g : adjacent_generators(4)) {
      RingElement img = phi_general(4, g);
      CHECK(is_tau_invariant(ctx, img));
      CHECK(is_at_most_one_singular(ctx, img));
    }
  }
  SingularContext ctx = ctx3();
  for (GeneratorId g : all_generators(3)) CHECK(in_universal_ring(ctx, phi_general(3, g)));
}
