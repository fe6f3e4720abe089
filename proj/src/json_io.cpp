#include "plg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "plg/errors.hpp"

namespace plg {

using nlohmann::json;

namespace {

const json& expect_array(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || (n != 0 && j.size() != n)) {
    throw ParseError(std::string("expected ") + what);
  }
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("rational must be a \"p/q\" string");
}

json to_json(const QuadSurd& s) {
  return {{"a", s.a().str()}, {"b", s.b().str()}, {"d", s.d().get_str()}};
}

QuadSurd surd_from_json(const json& j) {
  Rational d = rational_from_json(field(j, "d"));
  if (!d.is_integer() || d.sign() <= 0) throw ParseError("surd radicand must be a positive integer");
  return QuadSurd(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")), d.num());
}

json to_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }

Point2 point_from_json(const json& j) {
  expect_array(j, 2, "a point [\"x\",\"y\"]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const Mat2& m) {
  return json::array({json::array({m.a.str(), m.b.str()}), json::array({m.c.str(), m.d.str()})});
}

Mat2 mat2_from_json(const json& j) {
  expect_array(j, 2, "a matrix [[a,b],[c,d]]");
  expect_array(j[0], 2, "a matrix row");
  expect_array(j[1], 2, "a matrix row");
  return {rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
          rational_from_json(j[1][1])};
}

json to_json(const IntervalSet& s) {
  json arr = json::array();
  for (const auto& c : s.components()) arr.push_back(json::array({c.lo.str(), c.hi.str()}));
  return arr;
}

IntervalSet intervals_from_json(const json& j) {
  expect_array(j, 0, "a list of intervals");
  std::vector<Interval> parts;
  for (const auto& e : j) {
    Point2 p = point_from_json(e);
    if (p.x > p.y) throw ParseError("interval with lo > hi");
    parts.push_back({p.x, p.y});
  }
  return IntervalSet(std::move(parts));
}

json to_json(const PLMap1D& f) {
  json arr = json::array();
  for (const auto& p : f.breakpoints()) arr.push_back(json::array({p.x.str(), p.y.str()}));
  return {{"breakpoints", arr}};
}

PLMap1D pl_from_json(const json& j) {
  const json& bp = expect_array(field(j, "breakpoints"), 0, "a breakpoint list");
  std::vector<BreakPoint> pts;
  for (const auto& e : bp) {
    Point2 p = point_from_json(e);
    pts.push_back({p.x, p.y});
  }
  return PLMap1D::make(std::move(pts));
}

json rationals_to_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(q.str());
  return arr;
}

std::vector<Rational> rationals_from_json(const json& j) {
  expect_array(j, 0, "a list of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

json to_json(const FiberedMap2D& f) {
  json slabs = json::array();
  for (const auto& s : f.slabs()) {
    slabs.push_back({{"entry_lo", rationals_to_json(s.lo)},
                     {"entry_hi", rationals_to_json(s.hi)},
                     {"slopes", rationals_to_json(s.slopes)}});
  }
  return {{"x_breaks", rationals_to_json(f.x_breaks())}, {"slabs", slabs}};
}

FiberedMap2D fibered_from_json(const json& j) {
  std::vector<Slab> slabs;
  for (const auto& s : expect_array(field(j, "slabs"), 0, "a slab list")) {
    slabs.push_back({rationals_from_json(field(s, "entry_lo")),
                     rationals_from_json(field(s, "entry_hi")),
                     rationals_from_json(field(s, "slopes"))});
  }
  return FiberedMap2D::make(rationals_from_json(field(j, "x_breaks")), std::move(slabs));
}

json to_json(const PAMap2D& f) {
  json cells = json::array();
  for (const auto& c : f.cells()) {
    json verts = json::array();
    for (const auto& v : c.poly) verts.push_back(to_json(v));
    cells.push_back({{"vertices", verts}, {"linear", to_json(c.map.lin)}, {"translate", to_json(c.map.trans)}});
  }
  return {{"cells", cells}};
}

PAMap2D pa_from_json(const json& j) {
  std::vector<Cell> cells;
  for (const auto& c : expect_array(field(j, "cells"), 0, "a cell list")) {
    Cell cell;
    for (const auto& v : expect_array(field(c, "vertices"), 0, "a vertex list")) {
      cell.poly.push_back(point_from_json(v));
    }
    cell.map.lin = mat2_from_json(field(c, "linear"));
    cell.map.trans = point_from_json(field(c, "translate"));
    cells.push_back(std::move(cell));
  }
  return PAMap2D::make(std::move(cells));
}

json to_json(const ProjPoint& z) { return z.str(); }

ProjPoint proj_point_from_json(const json& j) {
  if (j.is_string()) return ProjPoint::parse(j.get<std::string>());
  return ProjPoint(rational_from_json(j));
}

json to_json(const ProjArc& a) {
  return {{"from", a.from.str()}, {"to", a.to.str()}, {"from_closed", a.from_closed}, {"to_closed", a.to_closed}};
}

ProjArc arc_from_json(const json& j) {
  auto flag = [&](const char* key) {
    const json& v = field(j, key);
    if (!v.is_boolean()) throw ParseError(std::string(key) + " must be a boolean");
    return v.get<bool>();
  };
  ProjPoint from = proj_point_from_json(field(j, "from")), to = proj_point_from_json(field(j, "to"));
  if (from == to) throw ParseError("arc endpoints must differ");
  return make_arc(std::move(from), std::move(to), flag("from_closed"), flag("to_closed"));
}

json to_json(const ProjCircleMap& f) {
  json bps = json::array(), pieces = json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(b.str());
  for (const auto& m : f.pieces()) pieces.push_back(to_json(m));
  return {{"breakpoints", bps}, {"pieces", pieces}};
}

ProjCircleMap proj_from_json(const json& j) {
  std::vector<ProjPoint> bps;
  for (const auto& b : expect_array(field(j, "breakpoints"), 0, "a breakpoint list")) {
    bps.push_back(proj_point_from_json(b));
  }
  std::vector<Mat2> pieces;
  for (const auto& m : expect_array(field(j, "pieces"), 0, "a piece list")) pieces.push_back(mat2_from_json(m));
  return ProjCircleMap::make(std::move(bps), std::move(pieces));
}

json to_json(const SurdPoint& z) {
  if (z.inf) return "inf";
  if (z.x.b().is_zero()) return to_json(z.x.a());
  return to_json(z.x);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace plg
