#pragma once

#include <map>
#include <vector>

#include "gtsing/gt_formulas.hpp"

namespace gtsing {

// The classical Gelfand-Tsetlin formulas written directly on tableaux,
// E(T(y)) = sum_j c_j(y) T(y + offset_j). This is a second route to the
// same data as phi_raising/phi_lowering/phi_diagonal and is kept
// independent of them.

struct ClassicalTerm {
  Shift offset;            ///< displacement of the tableau
  RationalFunction coeff;  ///< coefficient as a function of the tableau entries
};

/// Terms for E_{k,k+1}, E_{k+1,k} or E_kk. Throws DomainError otherwise.
std::vector<ClassicalTerm> classical_terms(int n, GeneratorId g);

/// Finite combination of orbit points y(x), keyed by the shift y.
using OrbitVector = std::map<Shift, Rational>;

/// E_rs acting on the orbit basis vector y(x) of the generic module at x.
/// Non-adjacent generators act through E_rs = [E_rt, E_ts], t the
/// neighbour of r toward s. Throws DomainError unless x is generic.
OrbitVector generic_act(const Point& x, GeneratorId g, const Shift& y);
OrbitVector generic_act(const Point& x, GeneratorId g, const OrbitVector& v);

}  // namespace gtsing
