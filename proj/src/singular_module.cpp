#include "gtsing/singular_module.hpp"

#include "gtsing/error.hpp"

namespace gtsing {

namespace {

const char* kind_name(DistKind k) { return k == DistKind::D1 ? "D1" : "D2"; }

bool tau_fixed(const SingularContext& ctx, const Shift& s) { return s.at(ctx.index_i()) == s.at(ctx.index_j()); }

// z1 * h reduced (see skew_ring.cpp for the same reasoning).
RationalFunction times_z1(const SingularContext& ctx, const RationalFunction& h) {
  if (auto q = h.den().divide_exact(ctx.z1())) return RationalFunction(h.num(), *q);
  return h * RationalFunction(ctx.z1());
}

template <typename Map>
void accumulate(Map& m, const typename Map::key_type& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) m.erase(it);
}

}  // namespace

std::string to_string(const BasisVec& b) { return std::string(kind_name(b.kind)) + ":" + to_spec(b.sigma); }

BasisVec parse_basis_spec(std::string_view text, int n) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("basis spec '" + std::string(text) + "' must look like D1:SHIFT or D2:SHIFT");
  std::string_view kind = text.substr(0, colon);
  BasisVec b{DistKind::D1, Shift(n)};
  if (kind == "D1") {
    b.kind = DistKind::D1;
  } else if (kind == "D2") {
    b.kind = DistKind::D2;
  } else {
    throw ParseError("unknown basis kind '" + std::string(kind) + "'");
  }
  b.sigma = parse_shift_spec(text.substr(colon + 1), n);
  return b;
}

void validate_basis(const SingularContext& ctx, const BasisVec& b) {
  if (b.sigma.order() != ctx.order()) throw DomainError("basis vector order does not match the context");
  if (!in_delta(ctx, b.sigma))
    throw DomainError("basis vector " + to_string(b) + " is not indexed by Delta (need m(k,i) <= m(k,j)); use " +
                      to_string(BasisVec{b.kind, tau_of_shift(ctx, b.sigma)}));
  if (b.kind == DistKind::D2 && tau_fixed(ctx, b.sigma)) throw DomainError("D2 is undefined on the tau-fixed shift " + to_spec(b.sigma));
}

DistVector DistVector::basis(const SingularContext& ctx, const BasisVec& b) {
  validate_basis(ctx, b);
  DistVector d;
  d.coeffs_.emplace(b, 1);
  return d;
}

Rational DistVector::coefficient(const BasisVec& b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void DistVector::add_canonical(const BasisVec& b, const Rational& c) { accumulate(coeffs_, b, c); }

void DistVector::add(const SingularContext& ctx, DistKind kind, const Shift& s, const Rational& c) {
  if (c == 0) return;
  DeltaRep rep = delta_representative(ctx, s);
  if (kind == DistKind::D1) {
    add_canonical({kind, rep.rep}, c);
    return;
  }
  if (tau_fixed(ctx, s))
    throw InvariantError("nonzero coefficient " + to_string(c) + " on D2 at the tau-fixed shift " + to_spec(s));
  add_canonical({kind, rep.rep}, rep.flipped ? Rational(-c) : c);
}

DistVector& DistVector::operator+=(const DistVector& other) {
  for (const auto& [b, c] : other.coeffs_) add_canonical(b, c);
  return *this;
}

DistVector& DistVector::operator-=(const DistVector& other) {
  for (const auto& [b, c] : other.coeffs_) add_canonical(b, -c);
  return *this;
}

DistVector& DistVector::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    for (auto& [b, v] : coeffs_) v *= c;
  }
  return *this;
}

DistVector canonicalize(const SingularContext& ctx, const DistVector& d) {
  DistVector out;
  for (const auto& [b, c] : d.coeffs()) out.add(ctx, b.kind, b.sigma, c);
  return out;
}

std::string to_string(const DistVector& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : d.coeffs()) out += to_string(c) + " " + to_string(b) + "\n";
  out.pop_back();
  return out;
}

DistVector evaluate_at_v(const SingularContext& ctx, const RingElement& a) {
  if (a.order() != ctx.order()) throw DomainError("ring element order does not match the context");
  if (!is_tau_invariant(ctx, a)) throw MembershipError("evaluate_at_v: element is not tau-invariant");
  const auto& v = ctx.point().coords();
  DistVector out;
  for (const auto& [s, h] : a.terms()) {
    RationalFunction g = times_z1(ctx, h);
    if (g.den().evaluate(v) == 0)
      throw MembershipError("evaluate_at_v: coefficient at " + to_string(s) + " has more than a simple pole along z1 at v");
    out.add(ctx, DistKind::D2, s, g.evaluate(v));
    out.add(ctx, DistKind::D1, s, partial_z1_at(g, ctx.pair(), v));
  }
  return out;
}

RingElement basis_element(const SingularContext& ctx, const BasisVec& b) {
  validate_basis(ctx, b);
  Shift t = tau_of_shift(ctx, b.sigma);
  RingElement out(ctx.order());
  if (b.kind == DistKind::D1) {
    out.add_term(b.sigma, Rational(1, 2));
    out.add_term(t, Rational(1, 2));
  } else {
    RationalFunction c = RationalFunction(1) / RationalFunction(Rational(2) * ctx.z1());
    out.add_term(b.sigma, c);
    out.add_term(t, -c);
  }
  return out;
}

DistVector act(const SingularContext& ctx, const RingElement& a, const BasisVec& b) {
  return evaluate_at_v(ctx, multiply(calibrated_convention(), a, basis_element(ctx, b)));
}

DistVector act(const SingularContext& ctx, const RingElement& a, const DistVector& d) {
  DistVector out;
  for (const auto& [b, c] : d.coeffs()) out += c * act(ctx, a, b);
  return out;
}

DistVector act_lie(const SingularContext& ctx, GeneratorId g, const BasisVec& b) {
  return act(ctx, phi_general(ctx.order(), g), b);
}

DistVector act_lie(const SingularContext& ctx, GeneratorId g, const DistVector& d) {
  return act(ctx, phi_general(ctx.order(), g), d);
}

Rational apply_basis_functional(const SingularContext& ctx, DistKind kind, const Shift& s, const Polynomial& f) {
  if (tau_of_function(ctx, f) != f) throw DomainError("test function is not tau-invariant");
  Shift t = tau_of_shift(ctx, s);
  Polynomial fs = shift_subst(f, s), ft = shift_subst(f, t);
  const auto& v = ctx.point().coords();
  if (kind == DistKind::D1) return (fs + ft).evaluate(v) / 2;
  if (s == t) throw DomainError("D2 is undefined on the tau-fixed shift " + to_spec(s));
  auto q = (fs - ft).divide_exact(ctx.z1());
  if (!q) throw InvariantError("difference quotient is not divisible by z1");
  return q->evaluate(v) / 2;
}

Rational apply_dist(const SingularContext& ctx, const DistVector& d, const Polynomial& f) {
  Rational sum = 0;
  for (const auto& [b, c] : d.coeffs()) sum += c * apply_basis_functional(ctx, b.kind, b.sigma, f);
  return sum;
}

// ---------------------------------------------------- derivative tableaux

void DerivTabVec::add(const SingularContext& ctx, TabKind kind, const Shift& offset, const Rational& c) {
  if (c == 0) return;
  DeltaRep rep = delta_representative(ctx, offset);
  if (kind == TabKind::T) {
    accumulate(coeffs_, TabSymbol{kind, rep.rep}, c);
  } else if (!tau_fixed(ctx, offset)) {
    accumulate(coeffs_, TabSymbol{kind, rep.rep}, rep.flipped ? Rational(-c) : c);
  }
}

DerivTabVec& DerivTabVec::operator+=(const DerivTabVec& other) {
  for (const auto& [s, c] : other.coeffs_) accumulate(coeffs_, s, c);
  return *this;
}

DerivTabVec& DerivTabVec::operator-=(const DerivTabVec& other) {
  for (const auto& [s, c] : other.coeffs_) accumulate(coeffs_, s, Rational(-c));
  return *this;
}

std::string to_string(const DerivTabVec& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : e.coeffs())
    out += to_string(c) + (s.kind == TabKind::T ? " T(" : " DT(") + to_spec(s.offset) + ")\n";
  out.pop_back();
  return out;
}

DerivTabVec appendix_act(const SingularContext& ctx, GeneratorId g, const DerivTabVec& e) {
  int n = ctx.order();
  if (std::abs(g.r - g.s) > 1) {
    int t = g.s > g.r ? g.r + 1 : g.r - 1;
    GeneratorId a{g.r, t}, b{t, g.s};
    return appendix_act(ctx, a, appendix_act(ctx, b, e)) - appendix_act(ctx, b, appendix_act(ctx, a, e));
  }
  auto terms = classical_terms(n, g);
  const auto& v = ctx.point().coords();
  DerivTabVec out;
  for (const auto& [sym, coef] : e.coeffs()) {
    for (const auto& term : terms) {
      // Coefficient at the moving point w(x) = x + offset.
      RationalFunction c = shift_subst(term.coeff, -sym.offset);
      Shift target = sym.offset + term.offset;
      RationalFunction jet = sym.kind == TabKind::T ? times_z1(ctx, c) : c;
      if (jet.den().evaluate(v) == 0) throw InvariantError("appendix_act: coefficient singular at v");
      out.add(ctx, TabKind::T, target, coef * partial_z1_at(jet, ctx.pair(), v));
      out.add(ctx, TabKind::DT, target, coef * jet.evaluate(v));
    }
  }
  return out;
}

DerivTabVec basis_correspondence(const SingularContext& ctx, const DistVector& d) {
  DerivTabVec out;
  for (const auto& [b, c] : d.coeffs()) out.add(ctx, b.kind == DistKind::D1 ? TabKind::T : TabKind::DT, -b.sigma, c);
  return out;
}

DistVector basis_correspondence_inverse(const SingularContext& ctx, const DerivTabVec& e) {
  DistVector out;
  for (const auto& [s, c] : e.coeffs()) out.add(ctx, s.kind == TabKind::T ? DistKind::D1 : DistKind::D2, -s.offset, c);
  return out;
}

}  // namespace gtsing
