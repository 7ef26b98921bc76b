#include "gtsing/gt_formulas.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <tuple>

#include "gtsing/error.hpp"
#include "gtsing/expression.hpp"

namespace gtsing {

namespace {

RationalFunction x(int k, int i) { return RationalFunction::variable({k, i}); }

void check_index(int n, int k, int lo, int hi, const char* what) {
  if (n < 2 || n > kMaxOrder) throw DomainError("order n=" + std::to_string(n) + " out of range");
  if (k < lo || k > hi)
    throw DomainError(std::string(what) + ": index " + std::to_string(k) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// prod_{j != i} (X(k,i) - X(k,j)).
RationalFunction vandermonde_factor(int k, int i) {
  RationalFunction d(1);
  for (int j = 1; j <= k; ++j)
    if (j != i) d = d * (x(k, i) - x(k, j));
  return d;
}

}  // namespace

std::string to_string(GeneratorId g) {
  if (g.r < 10 && g.s < 10) return "E" + std::to_string(g.r) + std::to_string(g.s);
  return "E(" + std::to_string(g.r) + "," + std::to_string(g.s) + ")";
}

LieElement structure_bracket(GeneratorId a, GeneratorId b) {
  LieElement out;
  if (a.s == b.r) out[{a.r, b.s}] += 1;
  if (b.s == a.r) out[{b.r, a.s}] -= 1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<GeneratorId> all_generators(int n) {
  std::vector<GeneratorId> out;
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= n; ++s) out.push_back({r, s});
  return out;
}

std::vector<GeneratorId> adjacent_generators(int n) {
  std::vector<GeneratorId> out;
  for (int k = 1; k <= n; ++k) {
    if (k < n) {
      out.push_back({k, k + 1});
      out.push_back({k + 1, k});
    }
    out.push_back({k, k});
  }
  return out;
}

RingElement phi_raising(int n, int k) {
  check_index(n, k, 1, n - 1, "phi_raising");
  RingElement out(n);
  for (int i = 1; i <= k; ++i) {
    RationalFunction num(1);
    for (int j = 1; j <= k + 1; ++j) num = num * (x(k, i) - x(k + 1, j));
    out.add_term(Shift::unit(n, {k, i}, -1), -(num / vandermonde_factor(k, i)));
  }
  return out;
}

RingElement phi_lowering(int n, int k) {
  check_index(n, k, 1, n - 1, "phi_lowering");
  RingElement out(n);
  for (int i = 1; i <= k; ++i) {
    RationalFunction num(1);
    for (int j = 1; j <= k - 1; ++j) num = num * (x(k, i) - x(k - 1, j));
    out.add_term(Shift::unit(n, {k, i}, 1), num / vandermonde_factor(k, i));
  }
  return out;
}

RingElement phi_diagonal(int n, int k) {
  check_index(n, k, 1, n, "phi_diagonal");
  RationalFunction c(0);
  for (int i = 1; i <= k; ++i) c = c + x(k, i) + RationalFunction(i - 1);
  for (int i = 1; i <= k - 1; ++i) c = c - x(k - 1, i) - RationalFunction(i - 1);
  return RingElement::term(c, Shift(n));
}

RingElement phi_general(int n, GeneratorId g) {
  check_index(n, g.r, 1, n, "phi_general");
  check_index(n, g.s, 1, n, "phi_general");
  if (g.s == g.r + 1) return phi_raising(n, g.r);
  if (g.r == g.s + 1) return phi_lowering(n, g.s);
  if (g.r == g.s) return phi_diagonal(n, g.r);

  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, RingElement> memo;
  auto key = std::make_tuple(n, g.r, g.s);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  int t = g.s > g.r ? g.r + 1 : g.r - 1;
  RingElement image = commutator(calibrated_convention(), phi_general(n, {g.r, t}), phi_general(n, {t, g.s}));
  std::lock_guard lock(mutex);
  return memo.try_emplace(key, std::move(image)).first->second;
}

RingElement phi_of(int n, const LieElement& x) {
  RingElement out(n);
  for (const auto& [g, c] : x) {
    RingElement img = phi_general(n, g);
    out += RationalFunction(c) * img;
  }
  return out;
}

namespace {

bool adjacent_pairs_match(int n, Convention conv) {
  auto gens = adjacent_generators(n);
  for (GeneratorId a : gens) {
    for (GeneratorId b : gens) {
      LieElement bracket = structure_bracket(a, b);
      // Brackets leaving the adjacent set would need the calibrated side already.
      bool closed = std::all_of(bracket.begin(), bracket.end(), [](const auto& kv) { return std::abs(kv.first.r - kv.first.s) <= 1; });
      if (!closed) continue;
      RingElement expected(n);
      for (const auto& [g, c] : bracket) expected += RationalFunction(c) * phi_general(n, g);
      if (commutator(conv, phi_general(n, a), phi_general(n, b)) != expected) return false;
    }
  }
  return true;
}

}  // namespace

Convention calibrate_convention(int n) {
  if (n < 2) throw DomainError("calibrate_convention needs n >= 2");
  bool circ = adjacent_pairs_match(n, Convention::circ);
  bool star = adjacent_pairs_match(n, Convention::star);
  if (circ == star)
    throw InvariantError(std::string("calibration: ") + (circ ? "both conventions" : "neither convention") + " satisfies the gl_n relations");
  return circ ? Convention::circ : Convention::star;
}

Convention calibrated_convention() {
  static const Convention conv = calibrate_convention(2);
  return conv;
}

bool HomomorphismReport::passed() const { return passed_count() == checks.size(); }

std::size_t HomomorphismReport::passed_count() const {
  std::size_t c = 0;
  for (const auto& check : checks) c += check.passed ? 1 : 0;
  return c;
}

HomomorphismReport verify_homomorphism(int n, const std::vector<std::pair<GeneratorId, GeneratorId>>& pairs, Convention conv) {
  HomomorphismReport report;
  report.n = n;
  report.convention = conv;
  for (const auto& [a, b] : pairs) {
    RingElement lhs = commutator(report.convention, phi_general(n, a), phi_general(n, b));
    RingElement rhs = phi_of(n, structure_bracket(a, b));
    HomomorphismCheck check{a, b, lhs == rhs, std::nullopt, {}};
    if (!check.passed) {
      RingElement diff = lhs - rhs;
      const auto& [s, f] = *diff.terms().begin();
      check.bad_shift = s;
      check.difference = to_string(f);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

HomomorphismReport verify_homomorphism(int n, Convention conv) {
  std::vector<std::pair<GeneratorId, GeneratorId>> pairs;
  for (GeneratorId a : all_generators(n))
    for (GeneratorId b : all_generators(n)) pairs.emplace_back(a, b);
  return verify_homomorphism(n, pairs, conv);
}

}  // namespace gtsing
