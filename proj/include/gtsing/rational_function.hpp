#pragma once

#include <span>
#include <utility>

#include "gtsing/polynomial.hpp"

namespace gtsing {

/// Reduced quotient num/den of polynomials over Q.
///
/// Canonical form: gcd(num, den) = 1, den monic in graded-lex order, and
/// den = 1 whenever num = 0. Two equal functions are structurally identical,
/// so operator== is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Reduces num/den. Throws DivisionByZero when den = 0.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction variable(VarId v) { return RationalFunction(Polynomial::variable(v)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  /// 1/f. Throws DivisionByZero for f = 0.
  RationalFunction reciprocal() const;
  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
  RationalFunction& operator+=(const RationalFunction& g) { return *this = *this + g; }
  RationalFunction& operator-=(const RationalFunction& g) { return *this = *this - g; }
  RationalFunction& operator*=(const RationalFunction& g) { return *this = *this * g; }

  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  /// Value at a dense point. Throws PoleError when den vanishes there.
  Rational evaluate(std::span<const Rational> point) const;

  /// Substitutes X_v -> X_v + offsets[v].
  RationalFunction translate(std::span<const Rational> offsets) const;

  RationalFunction swap_variables(std::size_t a, std::size_t b) const;

  RationalFunction derivative(std::size_t var) const;

 private:
  struct Unchecked {};
  RationalFunction(Unchecked, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  /// Rescales so den is monic; assumes coprime.
  static RationalFunction normalized(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& f, int e);

/// The linear form z1 = X(first) - X(second).
Polynomial z1_polynomial(const SingularPair& pair);

/// Chain-rule image of d/dz1 under z1 = a - b, z2 = a + b: (d/da - d/db) / 2.
RationalFunction partial_z1(const RationalFunction& f, const SingularPair& pair);

/// Value of partial_z1(f) at a point, without forming the derivative symbolically.
Rational partial_z1_at(const RationalFunction& f, const SingularPair& pair, std::span<const Rational> point);

struct Z1Division {
  RationalFunction quotient;  ///< f / z1, reduced
  int valuation = 0;          ///< order of vanishing of f along z1 = 0
};

/// f / z1 together with the z1-adic valuation of f.
Z1Division divide_by_z1(const RationalFunction& f, const SingularPair& pair);

/// z1-adic valuation of a polynomial (how many times z1 divides it).
int z1_valuation(const Polynomial& p, const SingularPair& pair);

}  // namespace gtsing
