#include "gtsing/serialize.hpp"

#include <fstream>
#include <sstream>

#include "gtsing/error.hpp"
#include "gtsing/expression.hpp"

namespace gtsing {

namespace {

std::string position_key(VarId v) { return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")"; }

VarId parse_position_key(const std::string& key) {
  int k = 0, i = 0;
  char close = 0;
  std::istringstream in(key);
  if (in.get() != '(' || !(in >> k) || in.get() != ',' || !(in >> i) || !in.get(close) || close != ')' || in.peek() != EOF)
    throw ParseError("bad shift key '" + key + "', expected \"(k,i)\"");
  return {k, i};
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

const std::string& string_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  return f.get_ref<const std::string&>();
}

Rational rational_value(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as \"p/q\" text");
}

DistKind parse_kind(const std::string& k) {
  if (k == "D1") return DistKind::D1;
  if (k == "D2") return DistKind::D2;
  throw ParseError("unknown distribution kind '" + k + "'");
}

}  // namespace

json point_to_json(const Point& p) {
  json rows = json::array();
  for (int k = 1; k <= p.order(); ++k) {
    json row = json::array();
    for (int i = 1; i <= k; ++i) row.push_back(to_string(p[VarId{k, i}]));
    rows.push_back(std::move(row));
  }
  return {{"n", p.order()}, {"rows", std::move(rows)}};
}

Point point_from_json(const json& j) {
  const json& jn = field(j, "n");
  if (!jn.is_number_integer()) throw ParseError("field 'n' must be an integer");
  int n = jn.get<int>();
  if (n < 1 || n > kMaxOrder) throw DomainError("order n=" + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
  const json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw ParseError("field 'rows' must be an array of " + std::to_string(n) + " rows");
  std::vector<Rational> coords;
  for (int k = 1; k <= n; ++k) {
    const json& row = rows[static_cast<std::size_t>(k - 1)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(k))
      throw ParseError("row " + std::to_string(k) + " must have " + std::to_string(k) + " entries");
    for (const json& x : row) coords.push_back(rational_value(x));
  }
  return Point(n, std::move(coords));
}

Point read_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open point file '" + path.string() + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("point file '" + path.string() + "' is not valid JSON");
  return point_from_json(j);
}

json shift_to_json(const Shift& s) {
  json out = json::object();
  for (std::size_t i = 0; i < s.components().size(); ++i)
    if (s.at(i) != 0) out[position_key(var_at(i))] = s.at(i);
  return out;
}

Shift shift_from_json(const json& j, int n) {
  if (!j.is_object()) throw ParseError("a shift must be a JSON object");
  Shift s(n);
  for (const auto& [key, value] : j.items()) {
    VarId v = parse_position_key(key);
    if (!valid_var(v, n - 1)) throw DomainError("shift position " + key + " not in rows 1.." + std::to_string(n - 1));
    if (!value.is_number_integer()) throw ParseError("shift component " + key + " must be an integer");
    s = s + Shift::unit(n, v, value.get<int>());
  }
  return s;
}

json ring_to_json(const RingElement& a) {
  json out = json::array();
  for (const auto& [s, f] : a.terms()) out.push_back({{"shift", shift_to_json(s)}, {"coeff", to_string(f)}});
  return out;
}

RingElement ring_from_json(const json& j, int n) {
  if (!j.is_array()) throw ParseError("a ring element must be a JSON array");
  RingElement a(n);
  for (const json& t : j) a.add_term(shift_from_json(field(t, "shift"), n), parse_expression(string_field(t, "coeff"), n));
  return a;
}

json basis_to_json(const BasisVec& b) {
  return {{"kind", b.kind == DistKind::D1 ? "D1" : "D2"}, {"shift", shift_to_json(b.sigma)}};
}

json dist_to_json(const DistVector& d) {
  json out = json::array();
  for (const auto& [b, c] : d.coeffs()) {
    json e = basis_to_json(b);
    e["coeff"] = to_string(c);
    out.push_back(std::move(e));
  }
  return out;
}

DistVector dist_from_json(const SingularContext& ctx, const json& j) {
  if (!j.is_array()) throw ParseError("a distribution vector must be a JSON array");
  DistVector d;
  for (const json& t : j)
    d.add(ctx, parse_kind(string_field(t, "kind")), shift_from_json(field(t, "shift"), ctx.order()), rational_value(field(t, "coeff")));
  return d;
}

json action_report_to_json(const ActionReport& r) {
  return {{"pair", {to_string(r.x), to_string(r.y)}},
          {"basis_vector", basis_to_json(r.basis)},
          {"lhs", dist_to_json(r.lhs)},
          {"rhs", dist_to_json(r.rhs)},
          {"equal", r.equal}};
}

json suite_report_to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json e = {{"check", f.what}};
    if (!f.detail.empty()) e["detail"] = f.detail;
    if (f.action) e["action"] = action_report_to_json(*f.action);
    failures.push_back(std::move(e));
  }
  return {{"suite", r.suite}, {"n", r.n}, {"passed", r.passed}, {"total", r.total}, {"ok", r.ok()}, {"failures", std::move(failures)}};
}

json point_class_to_json(const PointClass& c) {
  switch (c.tag) {
    case PointClass::Tag::Generic:
      return {{"class", "Generic"}};
    case PointClass::Tag::OneSingular:
      return {{"class", "OneSingular"}, {"witness", {{"k", c.k}, {"i", c.i}, {"j", c.j}}}};
    case PointClass::Tag::Other:
      break;
  }
  return {{"class", "Other"}};
}

}  // namespace gtsing
