#pragma once

#include <compare>
#include <map>
#include <string>

#include "gtsing/classical.hpp"
#include "gtsing/gt_formulas.hpp"

namespace gtsing {

// The module S spanned by the local distributions
//
//   D1_s = 1/2 ev_v o (s + tau(s)),   D2_s = ev_v o (s - tau(s)) / (2 z1),
//
// on tau-invariant functions, with D1_{tau s} = D1_s and D2_{tau s} = -D2_s.
// The canonical basis uses shifts in Delta (m(k,i) <= m(k,j)) and drops D2
// on tau-fixed shifts.

enum class DistKind { D1, D2 };

struct BasisVec {
  DistKind kind = DistKind::D1;
  Shift sigma;

  friend bool operator==(const BasisVec&, const BasisVec&) = default;
  friend std::strong_ordering operator<=>(const BasisVec& a, const BasisVec& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.sigma <=> b.sigma;
  }
};

/// "D1:id", "D2:(2,2)+1".
std::string to_string(const BasisVec& b);
/// Parses "KIND:SHIFTSPEC". Throws ParseError.
BasisVec parse_basis_spec(std::string_view text, int n);

/// Throws DomainError unless b belongs to the canonical basis at ctx.
void validate_basis(const SingularContext& ctx, const BasisVec& b);

/// Rational combination of canonical basis vectors.
class DistVector {
 public:
  DistVector() = default;
  static DistVector basis(const SingularContext& ctx, const BasisVec& b);

  const std::map<BasisVec, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(const BasisVec& b) const;

  /// Adds c times the functional `kind`_s for any shift s, rewriting it to
  /// the canonical basis. Throws InvariantError for a nonzero D2 on a
  /// tau-fixed shift.
  void add(const SingularContext& ctx, DistKind kind, const Shift& s, const Rational& c);

  DistVector& operator+=(const DistVector& other);
  DistVector& operator-=(const DistVector& other);
  DistVector& operator*=(const Rational& c);
  friend DistVector operator+(DistVector a, const DistVector& b) { return a += b; }
  friend DistVector operator-(DistVector a, const DistVector& b) { return a -= b; }
  friend DistVector operator*(const Rational& c, DistVector a) { return a *= c; }

  friend bool operator==(const DistVector&, const DistVector&) = default;

 private:
  void add_canonical(const BasisVec& b, const Rational& c);

  std::map<BasisVec, Rational> coeffs_;
};

/// Re-applies the relations to every term; the identity on canonical input.
DistVector canonicalize(const SingularContext& ctx, const DistVector& d);

/// One line per basis vector, "COEFF KIND:SHIFTSPEC"; "0" for zero.
std::string to_string(const DistVector& d);

/// ev_v o A for A in D_v, expanded in the canonical basis: each term
/// h sigma contributes g(v) D2_sigma + dg/dz1(v) D1_sigma with g = z1 h.
/// Throws MembershipError when A is not in D_v.
DistVector evaluate_at_v(const SingularContext& ctx, const RingElement& a);

/// The ring element whose composite with ev_v is the basis vector:
/// (s + tau s)/2 for D1, (s - tau s)/(2 z1) for D2.
RingElement basis_element(const SingularContext& ctx, const BasisVec& b);

/// Action of A in D_v on S: ev_v o B_D o A, i.e. multiply(calibrated, A, B_D).
DistVector act(const SingularContext& ctx, const RingElement& a, const BasisVec& b);
DistVector act(const SingularContext& ctx, const RingElement& a, const DistVector& d);

/// act(ctx, phi_general(g), .)
DistVector act_lie(const SingularContext& ctx, GeneratorId g, const BasisVec& b);
DistVector act_lie(const SingularContext& ctx, GeneratorId g, const DistVector& d);

/// Value of a single functional D1_s / D2_s (any shift s) on a
/// tau-invariant polynomial. Throws DomainError for non-invariant F or
/// D2 on a tau-fixed shift.
Rational apply_basis_functional(const SingularContext& ctx, DistKind kind, const Shift& s, const Polynomial& f);

Rational apply_dist(const SingularContext& ctx, const DistVector& d, const Polynomial& f);

// ---------------------------------------------------- derivative tableaux

enum class TabKind { T, DT };

/// T(v + offset) or DT(v + offset).
struct TabSymbol {
  TabKind kind = TabKind::T;
  Shift offset;

  friend bool operator==(const TabSymbol&, const TabSymbol&) = default;
  friend std::strong_ordering operator<=>(const TabSymbol& a, const TabSymbol& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

/// Combination of tableau symbols modulo T(w) = T(tau w), DT(w) = -DT(tau w).
/// Stored on the Delta side; DT on a tau-fixed point is zero.
class DerivTabVec {
 public:
  const std::map<TabSymbol, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(const SingularContext& ctx, TabKind kind, const Shift& offset, const Rational& c);

  DerivTabVec& operator+=(const DerivTabVec& other);
  DerivTabVec& operator-=(const DerivTabVec& other);
  friend DerivTabVec operator-(DerivTabVec a, const DerivTabVec& b) { return a -= b; }

  friend bool operator==(const DerivTabVec&, const DerivTabVec&) = default;

 private:
  std::map<TabSymbol, Rational> coeffs_;
};

std::string to_string(const DerivTabVec& e);

/// gl_n action on derivative tableaux, computed from the classical
/// formulas by the jet rules
///   E(T(w))  = ev_v d/dz1 [z1 E(T(w(x)))],   E(DT(w)) = ev_v d/dz1 [E(T(w(x)))].
DerivTabVec appendix_act(const SingularContext& ctx, GeneratorId g, const DerivTabVec& e);

/// D1_s -> T(s^{-1}(v)), D2_s -> DT(s^{-1}(v)), since ev_v o s = ev_{s^{-1}(v)}.
DerivTabVec basis_correspondence(const SingularContext& ctx, const DistVector& d);
DistVector basis_correspondence_inverse(const SingularContext& ctx, const DerivTabVec& e);

}  // namespace gtsing
