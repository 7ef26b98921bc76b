#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gtsing/layout.hpp"
#include "gtsing/rational.hpp"

namespace gtsing {

/// Element of the free abelian shift group on rows 1..n-1: an integer
/// vector m over positions (k,i), 1 <= i <= k <= n-1. Composition is
/// componentwise addition. Acting on a point, the shift adds m.
class Shift {
 public:
  /// Identity of order n.
  explicit Shift(int n);
  Shift(int n, std::vector<int> components);
  /// sigma_{k,i}^power.
  static Shift unit(int n, VarId position, int power = 1);

  int order() const { return n_; }
  const std::vector<int>& components() const { return m_; }
  int operator[](VarId position) const { return m_.at(var_index(position)); }
  int at(std::size_t index) const { return m_.at(index); }
  bool is_identity() const;

  Shift operator+(const Shift& other) const;  ///< composition
  Shift operator-() const;                    ///< inverse
  Shift operator-(const Shift& other) const { return *this + (-other); }
  Shift with_swapped(std::size_t a, std::size_t b) const;

  friend bool operator==(const Shift&, const Shift&) = default;
  friend std::strong_ordering operator<=>(const Shift& a, const Shift& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.m_ <=> b.m_;
  }

 private:
  int n_;
  std::vector<int> m_;
};

/// "id" or a product like "σ[2,1]*σ[2,2]^-1".
std::string to_string(const Shift& s);

/// Shift spec grammar: "id", or comma-separated atoms "(k,i)+m" / "(k,i)-m".
std::string to_spec(const Shift& s);
Shift parse_shift_spec(std::string_view text, int n);

/// A Gelfand-Tsetlin tableau with exact rational coordinates.
class Point {
 public:
  Point(int n, std::vector<Rational> coords);

  int order() const { return n_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](VarId v) const { return coords_.at(var_index(v)); }
  Rational& operator[](VarId v) { return coords_.at(var_index(v)); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  int n_;
  std::vector<Rational> coords_;
};

/// Point moved by the shift: rows 1..n-1 incremented, row n fixed.
Point apply_shift(const Shift& s, const Point& p);

}  // namespace gtsing
