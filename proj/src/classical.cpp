#include "gtsing/classical.hpp"

#include "gtsing/error.hpp"

namespace gtsing {

namespace {

Polynomial var(int k, int i) { return Polynomial::variable({k, i}); }

void add_to(OrbitVector& v, const Shift& s, const Rational& c) {
  if (c == 0) return;
  Rational& slot = v.try_emplace(s, 0).first->second;
  slot += c;
  if (slot == 0) v.erase(s);
}

OrbitVector generic_act_impl(const Point& x, GeneratorId g, const OrbitVector& v) {
  int n = x.order();
  if (std::abs(g.r - g.s) > 1) {
    int t = g.s > g.r ? g.r + 1 : g.r - 1;
    GeneratorId a{g.r, t}, b{t, g.s};
    OrbitVector out = generic_act_impl(x, a, generic_act_impl(x, b, v));
    for (const auto& [s, c] : generic_act_impl(x, b, generic_act_impl(x, a, v))) add_to(out, s, -c);
    return out;
  }
  auto terms = classical_terms(n, g);
  OrbitVector out;
  for (const auto& [y, c] : v) {
    Point at = apply_shift(y, x);
    for (const auto& t : terms) add_to(out, y + t.offset, c * t.coeff.evaluate(at.coords()));
  }
  return out;
}

}  // namespace

std::vector<ClassicalTerm> classical_terms(int n, GeneratorId g) {
  if (g.r < 1 || g.s < 1 || g.r > n || g.s > n) throw DomainError("generator " + to_string(g) + " out of range");
  std::vector<ClassicalTerm> out;
  if (g.r == g.s) {
    int k = g.r;
    Polynomial c(0);
    for (int i = 1; i <= k; ++i) c += var(k, i) + Polynomial(i - 1);
    for (int i = 1; i < k; ++i) c -= var(k - 1, i) + Polynomial(i - 1);
    out.push_back({Shift(n), RationalFunction(c)});
    return out;
  }
  bool raising = g.s == g.r + 1;
  bool lowering = g.r == g.s + 1;
  if (!raising && !lowering) throw DomainError("classical_terms: " + to_string(g) + " is not adjacent");
  int k = raising ? g.r : g.s;
  for (int i = 1; i <= k; ++i) {
    Polynomial num(raising ? -1 : 1), den(1);
    if (raising) {
      for (int j = 1; j <= k + 1; ++j) num = num * (var(k, i) - var(k + 1, j));
    } else {
      for (int j = 1; j <= k - 1; ++j) num = num * (var(k, i) - var(k - 1, j));
    }
    for (int j = 1; j <= k; ++j)
      if (j != i) den = den * (var(k, i) - var(k, j));
    out.push_back({Shift::unit(n, {k, i}, raising ? 1 : -1), RationalFunction(num, den)});
  }
  return out;
}

OrbitVector generic_act(const Point& x, GeneratorId g, const Shift& y) { return generic_act(x, g, OrbitVector{{y, 1}}); }

OrbitVector generic_act(const Point& x, GeneratorId g, const OrbitVector& v) {
  if (classify_point(x).tag != PointClass::Tag::Generic) throw DomainError("generic_act needs a generic point");
  return generic_act_impl(x, g, v);
}

}  // namespace gtsing
