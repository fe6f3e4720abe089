#pragma once

#include <string>

#include "json.hpp"
#include "plg/fibered2d.hpp"
#include "plg/interval_set.hpp"
#include "plg/mat2.hpp"
#include "plg/pa2d.hpp"
#include "plg/pl1d.hpp"
#include "plg/point2.hpp"
#include "plg/projcircle.hpp"
#include "plg/projective_line.hpp"
#include "plg/quad_surd.hpp"
#include "plg/rational.hpp"

namespace plg {

// All readers throw ParseError on malformed input; the map readers also
// propagate ValidationError from the constructors.

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadSurd& s);
QuadSurd surd_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Point2& p);
Point2 point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Mat2& m);
Mat2 mat2_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntervalSet& s);
IntervalSet intervals_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PLMap1D& f);
PLMap1D pl_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FiberedMap2D& f);
FiberedMap2D fibered_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PAMap2D& f);
PAMap2D pa_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProjPoint& z);
ProjPoint proj_point_from_json(const nlohmann::json& j);

/// {"from", "to", "from_closed", "to_closed"}
nlohmann::json to_json(const ProjArc& a);
ProjArc arc_from_json(const nlohmann::json& j);

/// {"breakpoints": [...], "pieces": [matrix, ...]}
nlohmann::json to_json(const ProjCircleMap& f);
ProjCircleMap proj_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SurdPoint& z);

nlohmann::json rationals_to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
nlohmann::json read_json_file(const std::string& path);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace plg
