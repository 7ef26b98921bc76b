#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "gtsing/suites.hpp"

namespace gtsing {

using json = nlohmann::json;

// JSON forms. Every from_json-style reader throws ParseError on
// malformed input, so the CLI can map it to a usage error.
//
//   Point       {"n": 3, "rows": [["1/3"], ["1/5", "1/5"], ["1/7", "1/11", "1/13"]]}
//   Shift       {"(2,1)": 1, "(2,2)": -1}            nonzero components only
//   RingElement [{"shift": {...}, "coeff": "x[1][1]"}, ...]   ordered by shift
//   DistVector  [{"kind": "D1", "shift": {...}, "coeff": "1/3"}, ...]

json point_to_json(const Point& p);
Point point_from_json(const json& j);
/// Reads and parses a Point file.
Point read_point_file(const std::filesystem::path& path);

json shift_to_json(const Shift& s);
Shift shift_from_json(const json& j, int n);

json ring_to_json(const RingElement& a);
RingElement ring_from_json(const json& j, int n);

json basis_to_json(const BasisVec& b);
json dist_to_json(const DistVector& d);
/// Rebuilds the vector through DistVector::add, so the result is canonical.
DistVector dist_from_json(const SingularContext& ctx, const json& j);

/// {"pair": ["E12","E21"], "basis_vector": {...}, "lhs": [...], "rhs": [...], "equal": bool}
json action_report_to_json(const ActionReport& r);

/// {"suite", "n", "passed", "total", "ok", "failures": [...]}
json suite_report_to_json(const SuiteReport& r);

/// {"class": "OneSingular", "witness": {"k":2,"i":1,"j":2}}; no witness otherwise.
json point_class_to_json(const PointClass& c);

}  // namespace gtsing
