#include "gtsing/shift.hpp"

#include <cctype>
#include <charconv>

#include "gtsing/error.hpp"

namespace gtsing {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) throw DomainError("order n=" + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
}

}  // namespace

Shift::Shift(int n) : n_(n) {
  check_order(n);
  m_.assign(num_shift_positions(n), 0);
}

Shift::Shift(int n, std::vector<int> components) : n_(n), m_(std::move(components)) {
  check_order(n);
  if (m_.size() != num_shift_positions(n)) throw DomainError("shift vector has wrong length for order " + std::to_string(n));
}

Shift Shift::unit(int n, VarId position, int power) {
  Shift s(n);
  if (!valid_var(position, n - 1)) throw DomainError("shift position (" + std::to_string(position.row) + "," + std::to_string(position.col) + ") not in rows 1..n-1");
  s.m_[var_index(position)] = power;
  return s;
}

bool Shift::is_identity() const {
  for (int c : m_)
    if (c != 0) return false;
  return true;
}

Shift Shift::operator+(const Shift& other) const {
  if (other.n_ != n_) throw DomainError("composing shifts of different order");
  Shift r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] += other.m_[i];
  return r;
}

Shift Shift::operator-() const {
  Shift r = *this;
  for (int& c : r.m_) c = -c;
  return r;
}

Shift Shift::with_swapped(std::size_t a, std::size_t b) const {
  Shift r = *this;
  std::swap(r.m_.at(a), r.m_.at(b));
  return r;
}

std::string to_string(const Shift& s) {
  std::string out;
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    int m = s.at(i);
    if (m == 0) continue;
    VarId v = var_at(i);
    if (!out.empty()) out += '*';
    out += "σ[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "id" : out;
}

std::string to_spec(const Shift& s) {
  std::string out;
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    int m = s.at(i);
    if (m == 0) continue;
    VarId v = var_at(i);
    if (!out.empty()) out += ',';
    out += "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")" + (m > 0 ? "+" : "") + std::to_string(m);
  }
  return out.empty() ? "id" : out;
}

Shift parse_shift_spec(std::string_view text, int n) {
  Shift s(n);
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact == "id") return s;
  std::string_view rest = compact;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("bad shift spec '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](std::string_view& sv, bool allow_sign) {
    std::size_t len = 0;
    if (allow_sign && len < sv.size() && (sv[len] == '+' || sv[len] == '-')) ++len;
    while (len < sv.size() && std::isdigit(static_cast<unsigned char>(sv[len]))) ++len;
    std::string_view num = sv.substr(0, len);
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size()) fail("expected an integer");
    sv.remove_prefix(len);
    return value;
  };
  if (rest.empty()) fail("empty");
  while (!rest.empty()) {
    if (rest.front() != '(') fail("expected '('");
    rest.remove_prefix(1);
    int k = read_int(rest, false);
    if (rest.empty() || rest.front() != ',') fail("expected ','");
    rest.remove_prefix(1);
    int i = read_int(rest, false);
    if (rest.empty() || rest.front() != ')') fail("expected ')'");
    rest.remove_prefix(1);
    if (rest.empty() || (rest.front() != '+' && rest.front() != '-')) fail("expected a signed exponent");
    int m = read_int(rest, true);
    if (!valid_var({k, i}, n - 1)) fail("position outside rows 1..n-1");
    s = s + Shift::unit(n, {k, i}, m);
    if (!rest.empty()) {
      if (rest.front() != ',') fail("expected ',' between atoms");
      rest.remove_prefix(1);
      if (rest.empty()) fail("trailing ','");
    }
  }
  return s;
}

Point::Point(int n, std::vector<Rational> coords) : n_(n), coords_(std::move(coords)) {
  check_order(n);
  if (coords_.size() != num_vars(n)) throw DomainError("point must assign all n(n+1)/2 coordinates");
}

Point apply_shift(const Shift& s, const Point& p) {
  if (s.order() != p.order()) throw DomainError("shift and point have different order");
  std::vector<Rational> c = p.coords();
  for (std::size_t i = 0; i < s.components().size(); ++i) c[i] += s.at(i);
  return Point(p.order(), std::move(c));
}

}  // namespace gtsing
