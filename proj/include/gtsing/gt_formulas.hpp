#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtsing/skew_ring.hpp"

namespace gtsing {

/// Elementary matrix E_rs of gl_n.
struct GeneratorId {
  int r = 1;
  int s = 1;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

std::string to_string(GeneratorId g);  ///< "E12", or "E(10,2)" past one digit

/// Formal integer combination of elementary matrices.
using LieElement = std::map<GeneratorId, int>;

/// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb.
LieElement structure_bracket(GeneratorId x, GeneratorId y);

/// All n^2 elementary matrices in row-major order.
std::vector<GeneratorId> all_generators(int n);

/// E_{k,k+1}, E_{k+1,k} and E_kk for every k: the adjacent generating set.
std::vector<GeneratorId> adjacent_generators(int n);

/// -sum_i [prod_j (X(k,i) - X(k+1,j)) / prod_{j != i} (X(k,i) - X(k,j))] sigma(k,i)^{-1}.
RingElement phi_raising(int n, int k);

/// sum_i [prod_j (X(k,i) - X(k-1,j)) / prod_{j != i} (X(k,i) - X(k,j))] sigma(k,i).
RingElement phi_lowering(int n, int k);

/// [sum_i (X(k,i) + i - 1) - sum_i (X(k-1,i) + i - 1)] id.
RingElement phi_diagonal(int n, int k);

/// Image of any E_rs. Non-adjacent generators use E_rs = [E_rt, E_ts] with
/// t the neighbour of r toward s, under the calibrated multiplication.
/// Results are memoized per (n, r, s).
RingElement phi_general(int n, GeneratorId g);

/// Linear extension of phi_general.
RingElement phi_of(int n, const LieElement& x);

/// The multiplication under which commutators of adjacent images match
/// the gl_n bracket at order n. Throws InvariantError unless exactly one
/// convention works.
Convention calibrate_convention(int n);

/// calibrate_convention(2), computed once.
Convention calibrated_convention();

struct HomomorphismCheck {
  GeneratorId x, y;
  bool passed = false;
  /// First differing term when the check fails.
  std::optional<Shift> bad_shift;
  std::string difference;  ///< coefficient of lhs - rhs at bad_shift
};

struct HomomorphismReport {
  int n = 0;
  Convention convention = Convention::star;
  std::vector<HomomorphismCheck> checks;

  bool passed() const;
  std::size_t passed_count() const;
};

/// Checks [phi(X), phi(Y)] = phi([X, Y]) over the given pairs, with the
/// commutator taken under `conv`. Only the calibrated one should pass.
HomomorphismReport verify_homomorphism(int n, const std::vector<std::pair<GeneratorId, GeneratorId>>& pairs,
                                       Convention conv = calibrated_convention());

/// All ordered pairs over all n^2 generators.
HomomorphismReport verify_homomorphism(int n, Convention conv = calibrated_convention());

}  // namespace gtsing
