#include "gtsing/rational_function.hpp"

#include "gtsing/error.hpp"

namespace gtsing {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_constant()) return a * (1 / b.constant_value());
  auto q = a.divide_exact(b);
  if (!q) throw InvariantError("rational function: inexact division by a gcd");
  return *std::move(q);
}

}  // namespace

RationalFunction RationalFunction::normalized(Polynomial num, Polynomial den) {
  if (num.is_zero()) return RationalFunction(Unchecked{}, {}, Polynomial(1));
  Rational lc = den.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return RationalFunction(Unchecked{}, std::move(num), std::move(den));
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num, den);
  *this = normalized(quotient(num, g), quotient(den, g));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Unchecked{}, -num_, den_); }

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.den_ == g.den_) {
    if (f.den_.is_constant()) return RationalFunction(f.num_ + g.num_);
    return RationalFunction(f.num_ + g.num_, f.den_);
  }
  if (f.is_polynomial() && g.is_polynomial()) return RationalFunction(f.num_ + g.num_);
  // a/b + c/d with h = gcd(b, d): numerator a(d/h) + c(b/h) over (b/h) d,
  // then only the factor h can share anything with the new numerator.
  Polynomial h = gcd(f.den_, g.den_);
  Polynomial bh = quotient(f.den_, h), dh = quotient(g.den_, h);
  Polynomial num = f.num_ * dh + g.num_ * bh;
  if (num.is_zero()) return {};
  if (h.is_constant()) return RationalFunction::normalized(std::move(num), f.den_ * g.den_);
  Polynomial k = gcd(num, h);
  if (!k.is_constant()) {
    num = quotient(num, k);
    h = quotient(h, k);
  }
  return RationalFunction::normalized(std::move(num), bh * dh * h);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (f.is_polynomial() && g.is_polynomial()) return RationalFunction(f.num_ * g.num_);
  // Cross-cancel: gcd(a, d) and gcd(c, b); the remaining pieces are coprime.
  Polynomial g1 = g.den_.is_constant() ? Polynomial(1) : gcd(f.num_, g.den_);
  Polynomial g2 = f.den_.is_constant() ? Polynomial(1) : gcd(g.num_, f.den_);
  Polynomial num = quotient(f.num_, g1) * quotient(g.num_, g2);
  Polynomial den = quotient(f.den_, g2) * quotient(g.den_, g1);
  return RationalFunction::normalized(std::move(num), std::move(den));
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  return f * g.reciprocal();
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw DivisionByZero("division by the zero rational function");
  return normalized(den_, num_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::translate(std::span<const Rational> offsets) const {
  // A translation is a ring automorphism fixing the leading form, so the
  // result stays reduced and monic.
  return RationalFunction(Unchecked{}, num_.translate(offsets), den_.translate(offsets));
}

RationalFunction RationalFunction::swap_variables(std::size_t a, std::size_t b) const {
  return normalized(num_.swap_variables(a, b), den_.swap_variables(a, b));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(var) * (1 / den_.constant_value()));
  Polynomial top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(top, den_ * den_);
}

RationalFunction pow(const RationalFunction& f, int e) {
  if (e < 0) return pow(f.reciprocal(), -e);
  return RationalFunction(f.num().pow(static_cast<unsigned>(e)), f.den().pow(static_cast<unsigned>(e)));
}

Polynomial z1_polynomial(const SingularPair& pair) {
  return Polynomial::variable(pair.first) - Polynomial::variable(pair.second);
}

RationalFunction partial_z1(const RationalFunction& f, const SingularPair& pair) {
  RationalFunction d = f.derivative(var_index(pair.first)) - f.derivative(var_index(pair.second));
  return d * RationalFunction(Rational(1, 2));
}

Rational partial_z1_at(const RationalFunction& f, const SingularPair& pair, std::span<const Rational> point) {
  std::size_t a = var_index(pair.first), b = var_index(pair.second);
  Rational den = f.den().evaluate(point);
  if (den == 0) throw PoleError("denominator vanishes at the evaluation point");
  Rational num = f.num().evaluate(point);
  Rational dnum = f.num().derivative(a).evaluate(point) - f.num().derivative(b).evaluate(point);
  Rational dden = f.den().derivative(a).evaluate(point) - f.den().derivative(b).evaluate(point);
  return (dnum * den - num * dden) / (2 * den * den);
}

int z1_valuation(const Polynomial& p, const SingularPair& pair) {
  if (p.is_zero()) throw DomainError("z1-adic valuation of zero is undefined");
  Polynomial z1 = z1_polynomial(pair);
  int v = 0;
  Polynomial cur = p;
  while (auto q = cur.divide_exact(z1)) {
    cur = *std::move(q);
    ++v;
  }
  return v;
}

Z1Division divide_by_z1(const RationalFunction& f, const SingularPair& pair) {
  Z1Division out;
  out.quotient = f / RationalFunction(z1_polynomial(pair));
  out.valuation = f.is_zero() ? 0 : z1_valuation(f.num(), pair) - z1_valuation(f.den(), pair);
  return out;
}

}  // namespace gtsing
