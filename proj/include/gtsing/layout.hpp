#pragma once

#include <cstddef>
#include <compare>
#include <string>

namespace gtsing {

/// Largest supported order. Bounded by the packed exponent vector in Monomial.
inline constexpr int kMaxOrder = 6;

/// Tableau coordinate X(row, col) with 1 <= col <= row <= n.
struct VarId {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Number of tableau coordinates, n(n+1)/2.
constexpr std::size_t num_vars(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }

/// Number of shiftable positions (rows 1..n-1), n(n-1)/2.
constexpr std::size_t num_shift_positions(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

/// Dense index of X(row, col). Rows are laid out in order, so the shift
/// positions of rows 1..n-1 occupy the leading indices.
constexpr std::size_t var_index(VarId v) {
  return static_cast<std::size_t>(v.row) * (v.row - 1) / 2 + static_cast<std::size_t>(v.col - 1);
}

constexpr VarId var_at(std::size_t index) {
  int row = 1;
  while (static_cast<std::size_t>(row) * (row + 1) / 2 <= index) ++row;
  return VarId{row, static_cast<int>(index - static_cast<std::size_t>(row) * (row - 1) / 2) + 1};
}

constexpr bool valid_var(VarId v, int n) { return 1 <= v.col && v.col <= v.row && v.row <= n; }

/// "x[k][i]"
std::string var_name(VarId v);

/// Two coordinates of one row, X(row, first) and X(row, second); z1 = first - second.
struct SingularPair {
  VarId first;
  VarId second;
};

}  // namespace gtsing
