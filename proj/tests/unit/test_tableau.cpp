#include "helpers.hpp"

#include "gtsing/error.hpp"
#include "gtsing/suites.hpp"

using namespace gtsing;
using namespace gtsing::testing;

namespace {

Point rows3(const char* x11, const char* x21, const char* x22, const char* x31, const char* x32, const char* x33) {
  return Point(3, {q(x11), q(x21), q(x22), q(x31), q(x32), q(x33)});
}

// Independent classifier oracle: collect every integral same-row pair.
std::vector<std::array<int, 3>> integral_pairs(const Point& p) {
  std::vector<std::array<int, 3>> out;
  for (int r = 1; r <= p.order(); ++r)
    for (int s = 1; s <= r; ++s)
      for (int t = s + 1; t <= r; ++t) {
        Rational d = p[VarId{r, s}] - p[VarId{r, t}];
        if (d.get_den() == 1) out.push_back({r, s, t});
      }
  return out;
}

}  // namespace

TEST_CASE("apply_shift") {
  Point p = rows3("1/5", "1/4", "-3/4", "1/7", "2/9", "5/11");
  CHECK(apply_shift(Shift(3), p) == p);
  Point moved = apply_shift(Shift::unit(3, {1, 1}), p);
  CHECK(moved[VarId{1, 1}] == Rational(6, 5));
  for (std::size_t i = 1; i < num_vars(3); ++i) CHECK(moved.coords()[i] == p.coords()[i]);
  Shift s = sh(3, "(1,1)+2,(2,2)-1");
  CHECK(apply_shift(s + (-s), p) == p);
  CHECK(apply_shift(-s, apply_shift(s, p)) == p);
}

TEST_CASE("shift action is free") {
  Sampler rng(29);
  Point p = generic_point(4);
  for (int t = 0; t < 50; ++t) {
    Shift s = rng.shift(4, 2);
    CHECK((apply_shift(s, p) == p) == s.is_identity());
  }
}

TEST_CASE("shift spec grammar") {
  CHECK(to_spec(sh(3, "(2,1)+1,(2,2)-2")) == "(2,1)+1,(2,2)-2");
  CHECK(sh(3, "id").is_identity());
  CHECK(sh(3, " (2,2)+1 , (2,2)+1 ") == Shift::unit(3, {2, 2}, 2));
  CHECK(to_string(sh(3, "(2,1)+1,(2,2)-1")) == "σ[2,1]*σ[2,2]^-1");
  CHECK_THROWS_AS(sh(3, "(3,1)+1"), ParseError);
  CHECK_THROWS_AS(sh(3, "(2,1)1"), ParseError);
  CHECK_THROWS_AS(sh(3, "(2,1)+1,"), ParseError);
  CHECK_THROWS_AS(sh(3, ""), ParseError);
}

TEST_CASE("classify_point examples") {
  PointClass c = classify_point(rows3("1/5", "1/4", "-3/4", "1/7", "2/9", "5/11"));
  CHECK(c == PointClass{PointClass::Tag::OneSingular, 2, 1, 2});
  CHECK(to_string(c) == "OneSingular(2,1,2)");
  CHECK(classify_point(generic_point(3)).tag == PointClass::Tag::Generic);
  CHECK(to_string(classify_point(rows3("1/3", "1/2", "3/2", "1/5", "6/5", "1/7"))) == "Other");
  // A row-n pair is still classified, even though no context can be built on it.
  CHECK(to_string(classify_point(rows3("1/3", "1/5", "1/7", "1/2", "5/2", "1/11"))) == "OneSingular(3,1,2)");
}

TEST_CASE("classify_point agrees with the pair-enumeration oracle") {
  Sampler rng(31);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) {
      Rational r(rng.uniform(-6, 6), rng.uniform(1, 2));
      r.canonicalize();
      c.push_back(r);
    }
    Point p(3, c);
    auto pairs = integral_pairs(p);
    PointClass got = classify_point(p);
    if (pairs.empty()) {
      CHECK(got.tag == PointClass::Tag::Generic);
    } else if (pairs.size() == 1) {
      CHECK(got == PointClass{PointClass::Tag::OneSingular, pairs[0][0], pairs[0][1], pairs[0][2]});
    } else {
      CHECK(got.tag == PointClass::Tag::Other);
    }
  }
}

TEST_CASE("classification survives integer shifts of generic points") {
  Sampler rng(37);
  Point p = generic_point(4);
  for (int t = 0; t < 30; ++t) CHECK(classify_point(apply_shift(rng.shift(4, 3), p)).tag == PointClass::Tag::Generic);
}

TEST_CASE("canonical point and singular context") {
  Point v = canonical_point(3, 2, 1, 2);
  CHECK(v == rows3("1/3", "1/5", "1/5", "1/7", "1/11", "1/13"));
  SingularContext ctx(v, 2, 1, 2);
  CHECK(ctx.z1() == poly("x[2][1] - x[2][2]"));
  CHECK(eval(RationalFunction(ctx.z1()), v) == 0);

  CHECK_THROWS_AS(SingularContext(v, 2, 2, 1), DomainError);
  CHECK_THROWS_AS(SingularContext(rows3("1/3", "1/5", "1/7", "1/2", "1/2", "1/11"), 3, 1, 2), DomainError);
  CHECK_THROWS_AS(SingularContext(rows3("1/3", "1/4", "-3/4", "1/7", "2/9", "5/11"), 2, 1, 2), DomainError);
  CHECK_THROWS_AS(SingularContext(rows3("1/3", "1/5", "1/5", "1/7", "8/7", "1/13"), 2, 1, 2), DomainError);
  CHECK_THROWS_AS(SingularContext(canonical_point(2, 1, 1, 1), 1, 1, 1), DomainError);

  for (auto [k, i, j] : {std::array{2, 1, 2}, std::array{3, 1, 3}, std::array{3, 2, 3}}) {
    SingularContext c4(canonical_point(4, k, i, j), k, i, j);
    CHECK(c4.point()[VarId{k, i}] == c4.point()[VarId{k, j}]);
  }
}

TEST_CASE("tau_of_shift and delta_representative") {
  SingularContext ctx = ctx3();
  Shift a = sh(3, "(2,1)+2");
  CHECK(tau_of_shift(ctx, a) == sh(3, "(2,2)+2"));
  Shift fixed = sh(3, "(1,1)-1,(2,1)+1,(2,2)+1");
  CHECK(tau_of_shift(ctx, fixed) == fixed);

  DeltaRep r = delta_representative(ctx, sh(3, "(2,2)+2"));
  CHECK(r.rep == sh(3, "(2,2)+2"));
  CHECK_FALSE(r.flipped);
  r = delta_representative(ctx, a);
  CHECK(r.rep == sh(3, "(2,2)+2"));
  CHECK(r.flipped);
  r = delta_representative(ctx, fixed);
  CHECK(r.rep == fixed);
  CHECK_FALSE(r.flipped);

  Sampler rng(41);
  for (int t = 0; t < 50; ++t) {
    Shift s = rng.shift(3, 3);
    Shift ts = tau_of_shift(ctx, s);
    CHECK(tau_of_shift(ctx, ts) == s);
    CHECK(ts.at(ctx.index_i()) + ts.at(ctx.index_j()) == s.at(ctx.index_i()) + s.at(ctx.index_j()));
    DeltaRep d = delta_representative(ctx, s);
    CHECK(in_delta(ctx, d.rep));
    DeltaRep again = delta_representative(ctx, d.rep);
    CHECK(again.rep == d.rep);
    CHECK_FALSE(again.flipped);
  }
}
