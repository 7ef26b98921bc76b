#pragma once

#include <string>
#include <utility>

#include "gtsing/rational_function.hpp"
#include "gtsing/shift.hpp"

namespace gtsing {

// ------------------------------------------------------------ substitutions

/// sigma(f) = f o sigma^{-1}: substitutes X(k,i) -> X(k,i) - m(k,i).
RationalFunction shift_subst(const RationalFunction& f, const Shift& s);
Polynomial shift_subst(const Polynomial& f, const Shift& s);

/// Swaps the variables a and b, which must lie in the same row.
RationalFunction transpose_subst(const RationalFunction& f, VarId a, VarId b);
Polynomial transpose_subst(const Polynomial& f, VarId a, VarId b);

/// num(f)(p) / den(f)(p). Throws PoleError when den(f)(p) = 0.
Rational eval(const RationalFunction& f, const Point& p);

// ---------------------------------------------------------- classification

struct PointClass {
  enum class Tag { Generic, OneSingular, Other };
  Tag tag = Tag::Generic;
  int k = 0, i = 0, j = 0;  ///< witness when OneSingular

  friend bool operator==(const PointClass&, const PointClass&) = default;
};

/// Counts same-row pairs with integral difference over all rows 1..n.
PointClass classify_point(const Point& p);

/// "Generic", "OneSingular(k,i,j)" or "Other".
std::string to_string(const PointClass& c);

// ------------------------------------------------------- singular context

/// A base point v with v(k,i) = v(k,j) for one pair in a row 2 <= k <= n-1,
/// every other same-row difference non-integral. Carries z1 = X(k,i) - X(k,j)
/// and the transposition tau of (k,i) and (k,j).
class SingularContext {
 public:
  /// Validates the point; throws DomainError with the reason on failure.
  SingularContext(Point v, int k, int i, int j);

  int order() const { return v_.order(); }
  int row() const { return k_; }
  int col_i() const { return i_; }
  int col_j() const { return j_; }
  const Point& point() const { return v_; }
  SingularPair pair() const { return {{k_, i_}, {k_, j_}}; }
  std::size_t index_i() const { return var_index({k_, i_}); }
  std::size_t index_j() const { return var_index({k_, j_}); }
  const Polynomial& z1() const { return z1_; }

  /// m(k,i) - m(k,j): the value of z1 at sigma^{-1}(v) is -delta(sigma).
  int z1_offset(const Shift& s) const { return s.at(index_i()) - s.at(index_j()); }

 private:
  Point v_;
  int k_, i_, j_;
  Polynomial z1_;
};

/// Canonical suite point: coordinates 1/p for distinct primes p >= 3 in
/// index order, with v(k,j) copied from v(k,i).
Point canonical_point(int n, int k, int i, int j);

/// Swaps the components at (k,i) and (k,j).
Shift tau_of_shift(const SingularContext& ctx, const Shift& s);

/// tau applied to a function (swap of X(k,i) and X(k,j)).
RationalFunction tau_of_function(const SingularContext& ctx, const RationalFunction& f);
Polynomial tau_of_function(const SingularContext& ctx, const Polynomial& f);

/// True iff m(k,i) <= m(k,j).
bool in_delta(const SingularContext& ctx, const Shift& s);

struct DeltaRep {
  Shift rep;
  bool flipped = false;
};

/// (s, false) when s is in Delta, else (tau(s), true).
DeltaRep delta_representative(const SingularContext& ctx, const Shift& s);

inline RationalFunction partial_z1(const RationalFunction& f, const SingularContext& ctx) {
  return partial_z1(f, ctx.pair());
}
inline Z1Division divide_by_z1(const RationalFunction& f, const SingularContext& ctx) {
  return divide_by_z1(f, ctx.pair());
}

}  // namespace gtsing
