#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gtsing/tableau.hpp"

namespace gtsing {

/// Element sum_i f_i sigma_i of the skew group ring R of rational functions
/// and shifts. Zero coefficients are never stored, so equality is
/// structural equality of canonical forms.
class RingElement {
 public:
  explicit RingElement(int n) : n_(n) {}
  static RingElement unit(int n);
  static RingElement term(const RationalFunction& f, const Shift& s);

  int order() const { return n_; }
  const std::map<Shift, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<Shift> support() const;
  RationalFunction coefficient(const Shift& s) const;

  void add_term(const Shift& s, const RationalFunction& f);

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  /// Left multiplication by a function: f * (sum g_i sigma_i) = sum f g_i sigma_i.
  friend RingElement operator*(const RationalFunction& f, const RingElement& a);

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  int n_;
  std::map<Shift, RationalFunction> terms_;
};

/// (f sigma) o (g rho) = f sigma(g) (sigma rho), extended bilinearly.
RingElement ring_mul_circ(const RingElement& a, const RingElement& b);

/// a * b := b o a.
RingElement ring_mul_star(const RingElement& a, const RingElement& b);

enum class Convention { circ, star };

std::string to_string(Convention c);
/// "circ" or "star". Throws DomainError.
Convention parse_convention(std::string_view name);

RingElement multiply(Convention c, const RingElement& a, const RingElement& b);

/// a.b - b.a under the chosen multiplication.
RingElement commutator(Convention c, const RingElement& a, const RingElement& b);

/// tau(sum f_i sigma_i) = sum tau(f_i) tau(sigma_i).
RingElement group_act_on_ring(const SingularContext& ctx, const RingElement& a);

bool is_tau_invariant(const SingularContext& ctx, const RingElement& a);

/// Every coefficient h has z1*h regular at v.
bool is_at_most_one_singular(const SingularContext& ctx, const RingElement& a);

/// Every coefficient h has z1*h regular at v and at sigma(v) for every
/// sigma in the support of a. Generators H/z1 with H regular along the
/// orbit pass; products of generators generally do not, since their
/// coefficients acquire poles on translates of z1 = 0.
bool is_regular_on_support(const SingularContext& ctx, const RingElement& a);

/// tau-invariant and at most 1-singular: membership in D_v.
bool in_universal_ring(const SingularContext& ctx, const RingElement& a);

/// a(F) = sum h_i sigma_i(F).
RationalFunction apply_to_function(const RingElement& a, const RationalFunction& f);

/// One line per term, "COEFF SHIFT", ordered by shift; "0" for zero.
std::string to_string(const RingElement& a);

}  // namespace gtsing
