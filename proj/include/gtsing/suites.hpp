#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtsing/singular_module.hpp"

namespace gtsing {

/// One module-relation check: X.(Y.D) - Y.(X.D) against [X,Y].D.
struct ActionReport {
  GeneratorId x, y;
  BasisVec basis;
  DistVector lhs, rhs;
  bool equal = false;
};

struct SuiteFailure {
  std::string what;    ///< which check, e.g. "associativity #17"
  std::string detail;  ///< offending canonical terms
  std::optional<ActionReport> action;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<SuiteFailure> failures;

  bool ok() const { return total > 0 && passed == total; }
  void record(bool ok, std::string what, std::string detail = {});
};

/// Default seeds, so CLI runs and tests see the same samples.
inline constexpr std::uint64_t kRingSeed = 0x5eed0001;
inline constexpr std::uint64_t kSingularitySeed = 0x5eed0002;

/// Documented module samples: D1:id, D1 at sigma(k,i)sigma(k,j),
/// D2 at sigma(k,j) and at sigma(k,j)^2.
std::vector<BasisVec> sample_basis(const SingularContext& ctx);

/// Coordinates 1/p for successive primes p >= 3; every same-row
/// difference is non-integral.
Point generic_point(int n);

/// Associativity and both distributive laws of o on random triples
/// (support <= 3, coefficient degree <= 3), plus the two-sided unit.
SuiteReport run_ring_suite(int n, int triples = 200, std::uint64_t seed = kRingSeed);

/// [phi(X), phi(Y)] = phi([X,Y]) on all ordered generator pairs.
SuiteReport run_homomorphism_suite(int n, Convention conv = calibrated_convention());

/// Random products of D_v generators stay tau-invariant and at most
/// 1-singular; also the closed form of A o A for A = (1/z1)(s' - tau s').
SuiteReport run_singularity_suite(const SingularContext& ctx, int products = 100, std::uint64_t seed = kSingularitySeed);

ActionReport check_module_relation(const SingularContext& ctx, GeneratorId x, GeneratorId y, const BasisVec& b);

/// check_module_relation over all ordered adjacent pairs and sample_basis.
SuiteReport run_module_suite(const SingularContext& ctx);

/// basis_correspondence intertwines act_lie and appendix_act for every
/// generator and every sample basis vector.
SuiteReport run_appendix_suite(const SingularContext& ctx);

/// gl_n commutator identities for generic_act on a few orbit points.
SuiteReport run_generic_suite(const Point& x, int orbit_points = 5);

}  // namespace gtsing
