#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gtsing/layout.hpp"
#include "gtsing/rational.hpp"

namespace gtsing {

/// Exponent vector over the tableau variables, ordered graded-lex with
/// X(1,1) > X(2,1) > X(2,2) > ... (variables in dense index order).
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = num_vars(kMaxOrder);

  Monomial() = default;
  static Monomial var(std::size_t index, unsigned exponent = 1);

  unsigned degree() const { return degree_; }
  unsigned exponent(std::size_t index) const { return exp_[index]; }
  bool is_one() const { return degree_ == 0; }

  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) to hold for `this` dividing `other`.
  Monomial quotient_of(const Monomial& other) const;
  /// Componentwise minimum.
  Monomial gcd(const Monomial& other) const;
  /// Copy with the exponent of variable `index` set to `e`.
  Monomial with_exponent(std::size_t index, unsigned e) const;
  /// Copy keeping only the variables selected by `mask`.
  Monomial project(std::uint32_t mask) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exp_ <=> b.exp_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint16_t degree_ = 0;
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate polynomial over Q. Terms are kept strictly
/// decreasing in monomial order with nonzero coefficients, so equal
/// polynomials are structurally identical.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(VarId v);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// Builds from arbitrary terms; sorts, merges and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value; requires is_constant().
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coef; }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  std::uint32_t support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Exact quotient a / b, or nullopt when b does not divide a.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Value at a point given by dense coordinates (size >= used variables).
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial derivative(std::size_t var) const;

  /// Substitutes X_v -> X_v + offsets[v] for every v < offsets.size().
  Polynomial translate(std::span<const Rational> offsets) const;

  Polynomial swap_variables(std::size_t a, std::size_t b) const;

  /// Coefficients in `var`: result[d] is the coefficient of var^d.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace gtsing
