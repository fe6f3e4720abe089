#include "plg/perturb.hpp"

#include "plg/json_io.hpp"

namespace plg {

static_assert(PerturbSpace<IntervalSpace>);
static_assert(PerturbSpace<FiberedSpace>);

Rational IntervalSpace::boundary_distance(const Rational& x) const { return min(x, Rational(1) - x); }

PLMap1D IntervalSpace::bump(const Rational& y, const Rational& r, const Rational& t) const {
  return bump_pl(y - r, y + r, y, t);
}

bool IntervalSpace::identity_outside(const PLMap1D& h, const Rational& y, const Rational& r) const {
  Rational a = y - r, b = y + r;
  if (h(a) != a || h(b) != b) return false;
  for (const auto& p : h.breakpoints()) {
    if ((p.x <= a || p.x >= b) && p.x != p.y) return false;
  }
  return true;
}

nlohmann::json IntervalSpace::support_json(const Rational& y, const Rational& r) const {
  return nlohmann::json::array({(y - r).str(), (y + r).str()});
}

nlohmann::json IntervalSpace::element_to_json(const PLMap1D& f) const { return to_json(f); }
PLMap1D IntervalSpace::element_from_json(const nlohmann::json& j) const { return pl_from_json(j); }
nlohmann::json IntervalSpace::point_to_json(const Rational& x) const { return to_json(x); }
Rational IntervalSpace::point_from_json(const nlohmann::json& j) const { return rational_from_json(j); }

Rational FiberedSpace::distance(const Point2& a, const Point2& b) const {
  return max((a.x - b.x).abs(), (a.y - b.y).abs());
}

Rational FiberedSpace::boundary_distance(const Point2& p) const {
  Rational one(1);
  return min(min(p.x, one - p.x), min(p.y, one - p.y));
}

FiberedMap2D FiberedSpace::bump(const Point2& y, const Rational& r, const Rational& t) const {
  return vertical_bump(y.x - r, y.x + r, y, t, y.y - r, y.y + r);
}

bool FiberedSpace::identity_outside(const FiberedMap2D& h, const Point2& y, const Rational& r) const {
  auto box = support_box(h);
  if (!box) return true;
  return box->x0 >= y.x - r && box->x1 <= y.x + r && box->t0 >= y.y - r && box->t1 <= y.y + r;
}

nlohmann::json FiberedSpace::support_json(const Point2& y, const Rational& r) const {
  return {{"x0", (y.x - r).str()}, {"x1", (y.x + r).str()}, {"t0", (y.y - r).str()}, {"t1", (y.y + r).str()}};
}

nlohmann::json FiberedSpace::element_to_json(const FiberedMap2D& f) const { return to_json(f); }
FiberedMap2D FiberedSpace::element_from_json(const nlohmann::json& j) const { return fibered_from_json(j); }
nlohmann::json FiberedSpace::point_to_json(const Point2& p) const { return to_json(p); }
Point2 FiberedSpace::point_from_json(const nlohmann::json& j) const { return ::plg::point_from_json(j); }

}  // namespace plg
