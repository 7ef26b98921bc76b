#include "gtsing/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "gtsing/error.hpp"

namespace gtsing {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t index, unsigned exponent) {
  if (index >= kMaxVars) throw DomainError("variable index out of range");
  if (exponent > 255) throw DomainError("exponent overflow");
  Monomial m;
  m.exp_[index] = static_cast<std::uint8_t>(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0) mask |= std::uint32_t{1} << i;
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{exp_[i]} + other.exp_[i];
    if (e > 255) throw DomainError("exponent overflow");
    r.exp_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint8_t>(other.exp_[i] - exp_[i]);
  r.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::min(exp_[i], other.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::with_exponent(std::size_t index, unsigned e) const {
  if (e > 255) throw DomainError("exponent overflow");
  Monomial r = *this;
  r.degree_ = static_cast<std::uint16_t>(r.degree_ - r.exp_[index] + e);
  r.exp_[index] = static_cast<std::uint8_t>(e);
  return r;
}

Monomial Monomial::project(std::uint32_t mask) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (mask & (std::uint32_t{1} << i)) {
      r.exp_[i] = exp_[i];
      d += exp_[i];
    }
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merges two strictly decreasing term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

Polynomial Polynomial::variable(VarId v) { return monomial(Monomial::var(var_index(v)), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_[0].coef;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) mask |= t.mono.support();
  return mask;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coef);
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.mono * t.mono, s.coef * t.coef});
  return Polynomial::from_terms(std::move(prod));
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return {};
  Polynomial r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the graded-lex order.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return Polynomial{};
  if (divisor.size() == 1) {
    const Term& d = divisor.terms_[0];
    Polynomial q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back(Term{d.mono.quotient_of(t.mono), t.coef / d.coef});
    }
    return q;
  }
  if (divisor.total_degree() > total_degree()) return std::nullopt;
  for (std::size_t v = 0; v < Monomial::kMaxVars; ++v)
    if (divisor.degree_in(v) > degree_in(v)) return std::nullopt;

  // The remainder lives in an ordered map so each step only touches the
  // divisor's terms instead of re-merging the whole remainder.
  const Term& lead = divisor.terms_.front();
  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coef);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    // Exact division never meets a leading term the divisor's leading term misses.
    if (!lead.mono.divides(top->first)) return std::nullopt;
    Term q{lead.mono.quotient_of(top->first), top->second / lead.coef};
    rem.erase(top);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const Term& t = divisor.terms_[k];
      auto [it, inserted] = rem.try_emplace(t.mono * q.mono);
      it->second -= t.coef * q.coef;
      if (!inserted && it->second == 0) rem.erase(it);
    }
    quotient.push_back(std::move(q));
  }
  Polynomial out;
  out.terms_ = std::move(quotient);  // produced in decreasing order
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < Monomial::kMaxVars && v != 0; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (i >= point.size()) throw DomainError("point has too few coordinates");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(var);
    if (e == 0) continue;
    out.push_back(Term{t.mono.with_exponent(var, e - 1), t.coef * e});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::translate(std::span<const Rational> offsets) const {
  bool any = false;
  for (const auto& c : offsets) any = any || c != 0;
  if (!any) return *this;

  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::vector<Term> expansion{Term{Monomial{}, t.coef}};
    for (std::size_t v = 0; v < Monomial::kMaxVars; ++v) {
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (v >= offsets.size() || offsets[v] == 0) {
        Monomial m = Monomial::var(v, e);
        for (auto& x : expansion) x.mono = x.mono * m;
        continue;
      }
      // (X + c)^e = sum_k C(e,k) c^(e-k) X^k
      std::vector<Term> next;
      next.reserve(expansion.size() * (e + 1));
      for (unsigned k = 0; k <= e; ++k) {
        Rational factor(binomial(e, k));
        Rational cp;
        mpz_pow_ui(cp.get_num_mpz_t(), offsets[v].get_num_mpz_t(), e - k);
        mpz_pow_ui(cp.get_den_mpz_t(), offsets[v].get_den_mpz_t(), e - k);
        factor *= cp;
        Monomial m = k == 0 ? Monomial{} : Monomial::var(v, k);
        for (const auto& x : expansion) next.push_back(Term{x.mono * m, x.coef * factor});
      }
      expansion = std::move(next);
    }
    for (auto& x : expansion) out.push_back(std::move(x));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::swap_variables(std::size_t a, std::size_t b) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned ea = t.mono.exponent(a), eb = t.mono.exponent(b);
    out.push_back(Term{t.mono.with_exponent(a, eb).with_exponent(b, ea), t.coef});
  }
  return from_terms(std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> coeffs(degree_in(var) + 1);
  // Stripping a common power of `var` keeps the relative order intact.
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(var);
    coeffs[e].terms_.push_back(Term{t.mono.with_exponent(var, 0), t.coef});
  }
  return coeffs;
}

// --------------------------------------------------------------------- gcd

namespace {

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// gcd(a, b) where the variables in `mask` occur in a but not in b: the
// gcd divides every coefficient of a viewed as a polynomial in those variables.
Polynomial gcd_through_coefficients(const Polynomial& a, std::uint32_t mask, const Polynomial& b) {
  std::map<Monomial, std::vector<Term>, std::greater<>> groups;
  for (const auto& t : a.terms()) {
    Monomial key = t.mono.project(mask);
    groups[key].push_back(Term{key.quotient_of(t.mono), t.coef});
  }
  std::vector<Polynomial> coeffs;
  coeffs.reserve(groups.size());
  for (auto& [key, terms] : groups) coeffs.push_back(Polynomial::from_terms(std::move(terms)));
  std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  Polynomial g = b;
  for (const auto& c : coeffs) {
    g = gcd_impl(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g.monic();
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InvariantError("gcd: expected exact division failed");
  return *std::move(q);
}

// Sparse pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  Polynomial lcb = b.coefficients_in(var).back();
  while (!a.is_zero()) {
    unsigned da = a.degree_in(var);
    if (da < db) break;
    Polynomial lca = a.coefficients_in(var).back();
    Monomial shift = da == db ? Monomial{} : Monomial::var(var, da - db);
    Polynomial sub = lca * b;
    a = lcb * a - sub.mul_monomial(shift, 1);
  }
  return a;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  Polynomial c = content_in(p, var);
  if (c.is_constant()) return p.monic();
  return exact_quotient(p, c).monic();
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.size() == 1 || b.size() == 1) {
    Monomial m = a.size() == 1 ? a.leading().mono : b.leading().mono;
    for (const auto& t : a.terms()) m = m.gcd(t.mono);
    for (const auto& t : b.terms()) m = m.gcd(t.mono);
    return Polynomial::monomial(m, 1);
  }

  std::uint32_t sa = a.support(), sb = b.support();
  if (std::uint32_t only = sa & ~sb) return gcd_through_coefficients(a, only, b);
  if (std::uint32_t only = sb & ~sa) return gcd_through_coefficients(b, only, a);

  if (a.size() >= b.size()) {
    if (a.divide_exact(b)) return b.monic();
  } else if (b.divide_exact(a)) {
    return a.monic();
  }

  // Same variable set: pick the main variable of smallest degree.
  std::size_t var = 0;
  unsigned best = ~0u;
  for (std::size_t v = 0; v < Monomial::kMaxVars; ++v) {
    if (!(sa & (std::uint32_t{1} << v))) continue;
    unsigned d = std::min(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }

  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial content = gcd_impl(ca, cb);
  Polynomial pa = ca.is_constant() ? a.monic() : exact_quotient(a, ca).monic();
  Polynomial pb = cb.is_constant() ? b.monic() : exact_quotient(b, cb).monic();
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  Polynomial g;
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return (content * g).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_impl(a, b); }

}  // namespace gtsing
