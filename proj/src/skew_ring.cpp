#include "gtsing/skew_ring.hpp"

#include "gtsing/error.hpp"
#include "gtsing/expression.hpp"

namespace gtsing {

namespace {

// Sums a list of functions pairwise, which keeps intermediate denominators small.
RationalFunction balanced_sum(std::vector<RationalFunction>& parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<RationalFunction> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

void check_orders(const RingElement& a, const RingElement& b) {
  if (a.order() != b.order()) throw DomainError("ring elements of different order");
}

// z1 * h, reduced. Since h is reduced and z1 irreducible, z1 either divides
// den(h) once or multiplies the numerator.
RationalFunction times_z1(const SingularContext& ctx, const RationalFunction& h) {
  if (auto q = h.den().divide_exact(ctx.z1())) return RationalFunction(h.num(), *q);
  return h * RationalFunction(ctx.z1());
}

bool regular_at(const RationalFunction& g, const Point& p) { return g.den().evaluate(p.coords()) != 0; }

}  // namespace

RingElement RingElement::unit(int n) { return term(RationalFunction(1), Shift(n)); }

RingElement RingElement::term(const RationalFunction& f, const Shift& s) {
  RingElement a(s.order());
  a.add_term(s, f);
  return a;
}

std::vector<Shift> RingElement::support() const {
  std::vector<Shift> out;
  out.reserve(terms_.size());
  for (const auto& [s, f] : terms_) out.push_back(s);
  return out;
}

RationalFunction RingElement::coefficient(const Shift& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RationalFunction{} : it->second;
}

void RingElement::add_term(const Shift& s, const RationalFunction& f) {
  if (s.order() != n_) throw DomainError("shift order does not match ring element order");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& [s, f] : r.terms_) f = -f;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_orders(*this, other);
  for (const auto& [s, f] : other.terms_) add_term(s, f);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_orders(*this, other);
  for (const auto& [s, f] : other.terms_) add_term(s, -f);
  return *this;
}

RingElement operator*(const RationalFunction& f, const RingElement& a) {
  RingElement r(a.order());
  for (const auto& [s, g] : a.terms_) r.add_term(s, f * g);
  return r;
}

RingElement ring_mul_circ(const RingElement& a, const RingElement& b) {
  check_orders(a, b);
  std::map<Shift, std::vector<RationalFunction>> parts;
  for (const auto& [sigma, f] : a.terms()) {
    for (const auto& [rho, g] : b.terms()) parts[sigma + rho].push_back(f * shift_subst(g, sigma));
  }
  RingElement out(a.order());
  for (auto& [s, list] : parts) out.add_term(s, balanced_sum(list));
  return out;
}

RingElement ring_mul_star(const RingElement& a, const RingElement& b) { return ring_mul_circ(b, a); }

std::string to_string(Convention c) { return c == Convention::circ ? "circ" : "star"; }

Convention parse_convention(std::string_view name) {
  if (name == "circ") return Convention::circ;
  if (name == "star") return Convention::star;
  throw DomainError("unknown convention '" + std::string(name) + "', expected circ or star");
}

RingElement multiply(Convention c, const RingElement& a, const RingElement& b) {
  return c == Convention::circ ? ring_mul_circ(a, b) : ring_mul_star(a, b);
}

RingElement commutator(Convention c, const RingElement& a, const RingElement& b) {
  return multiply(c, a, b) - multiply(c, b, a);
}

RingElement group_act_on_ring(const SingularContext& ctx, const RingElement& a) {
  RingElement out(a.order());
  for (const auto& [s, f] : a.terms()) out.add_term(tau_of_shift(ctx, s), tau_of_function(ctx, f));
  return out;
}

bool is_tau_invariant(const SingularContext& ctx, const RingElement& a) { return group_act_on_ring(ctx, a) == a; }

bool is_at_most_one_singular(const SingularContext& ctx, const RingElement& a) {
  for (const auto& [s, h] : a.terms())
    if (!regular_at(times_z1(ctx, h), ctx.point())) return false;
  return true;
}

bool is_regular_on_support(const SingularContext& ctx, const RingElement& a) {
  std::vector<Point> check{ctx.point()};
  for (const auto& [s, h] : a.terms()) check.push_back(apply_shift(s, ctx.point()));
  for (const auto& [s, h] : a.terms()) {
    RationalFunction g = times_z1(ctx, h);
    for (const auto& p : check)
      if (!regular_at(g, p)) return false;
  }
  return true;
}

bool in_universal_ring(const SingularContext& ctx, const RingElement& a) {
  return is_tau_invariant(ctx, a) && is_at_most_one_singular(ctx, a);
}

RationalFunction apply_to_function(const RingElement& a, const RationalFunction& f) {
  std::vector<RationalFunction> parts;
  parts.reserve(a.size());
  for (const auto& [s, h] : a.terms()) parts.push_back(h * shift_subst(f, s));
  return balanced_sum(parts);
}

std::string to_string(const RingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [s, f] : a.terms()) {
    std::string coeff = to_string(f);
    if (f.num().size() > 1 || !f.is_polynomial()) coeff = "(" + coeff + ")";
    out += coeff + " " + to_string(s) + "\n";
  }
  out.pop_back();
  return out;
}

}  // namespace gtsing
