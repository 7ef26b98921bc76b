#include "gtsing/tableau.hpp"

#include "gtsing/error.hpp"

namespace gtsing {

namespace {

std::vector<Rational> inverse_offsets(const Shift& s) {
  std::vector<Rational> offsets(s.components().size());
  for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = -s.at(i);
  return offsets;
}

void check_same_row(VarId a, VarId b) {
  if (a.row != b.row) throw DomainError("transpose_subst: " + var_name(a) + " and " + var_name(b) + " lie in different rows");
}

std::string triple(int k, int i, int j) {
  return "(" + std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

RationalFunction shift_subst(const RationalFunction& f, const Shift& s) { return f.translate(inverse_offsets(s)); }

Polynomial shift_subst(const Polynomial& f, const Shift& s) { return f.translate(inverse_offsets(s)); }

RationalFunction transpose_subst(const RationalFunction& f, VarId a, VarId b) {
  check_same_row(a, b);
  return f.swap_variables(var_index(a), var_index(b));
}

Polynomial transpose_subst(const Polynomial& f, VarId a, VarId b) {
  check_same_row(a, b);
  return f.swap_variables(var_index(a), var_index(b));
}

Rational eval(const RationalFunction& f, const Point& p) { return f.evaluate(p.coords()); }

PointClass classify_point(const Point& p) {
  PointClass out;
  int integral = 0;
  for (int r = 1; r <= p.order(); ++r) {
    for (int s = 1; s <= r; ++s) {
      for (int t = s + 1; t <= r; ++t) {
        if (!is_integer(Rational(p[{r, s}] - p[{r, t}]))) continue;
        if (integral++ == 0) {
          out.k = r;
          out.i = s;
          out.j = t;
        }
      }
    }
  }
  if (integral == 0) return PointClass{};
  if (integral == 1) {
    out.tag = PointClass::Tag::OneSingular;
    return out;
  }
  return PointClass{PointClass::Tag::Other, 0, 0, 0};
}

std::string to_string(const PointClass& c) {
  switch (c.tag) {
    case PointClass::Tag::Generic:
      return "Generic";
    case PointClass::Tag::OneSingular:
      return "OneSingular" + triple(c.k, c.i, c.j);
    case PointClass::Tag::Other:
      return "Other";
  }
  return "Other";
}

SingularContext::SingularContext(Point v, int k, int i, int j) : v_(std::move(v)), k_(k), i_(i), j_(j) {
  int n = v_.order();
  if (n < 3) throw DomainError("a singular context needs n >= 3");
  if (k < 2 || k > n - 1) throw DomainError("singular row k=" + std::to_string(k) + " must satisfy 2 <= k <= n-1");
  if (!(1 <= i && i < j && j <= k)) throw DomainError("singular columns must satisfy 1 <= i < j <= k");
  if (v_[{k, i}] != v_[{k, j}])
    throw DomainError("point must satisfy v(k,i) = v(k,j) for the singular pair " + triple(k, i, j));
  PointClass c = classify_point(v_);
  if (c.tag != PointClass::Tag::OneSingular || c.k != k || c.i != i || c.j != j)
    throw DomainError("point is " + to_string(c) + ", not OneSingular" + triple(k, i, j));
  z1_ = z1_polynomial(pair());
}

Point canonical_point(int n, int k, int i, int j) {
  std::vector<Rational> coords;
  long p = 2;
  auto next_prime = [&p] {
    for (++p;; ++p) {
      bool prime = true;
      for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (prime) return p;
    }
  };
  bool tied = i < j && valid_var({k, i}, n) && valid_var({k, j}, n);
  for (std::size_t idx = 0; idx < num_vars(n); ++idx) {
    if (tied && idx == var_index({k, j})) {
      coords.push_back(coords[var_index({k, i})]);
    } else {
      coords.emplace_back(1, next_prime());
    }
  }
  return Point(n, std::move(coords));
}

Shift tau_of_shift(const SingularContext& ctx, const Shift& s) { return s.with_swapped(ctx.index_i(), ctx.index_j()); }

RationalFunction tau_of_function(const SingularContext& ctx, const RationalFunction& f) {
  return f.swap_variables(ctx.index_i(), ctx.index_j());
}

Polynomial tau_of_function(const SingularContext& ctx, const Polynomial& f) {
  return f.swap_variables(ctx.index_i(), ctx.index_j());
}

bool in_delta(const SingularContext& ctx, const Shift& s) { return s.at(ctx.index_i()) <= s.at(ctx.index_j()); }

DeltaRep delta_representative(const SingularContext& ctx, const Shift& s) {
  if (in_delta(ctx, s)) return {s, false};
  return {tau_of_shift(ctx, s), true};
}

}  // namespace gtsing
