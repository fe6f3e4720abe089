#pragma once

#include <optional>
#include <vector>

#include "plg/mat2.hpp"
#include "plg/point2.hpp"

namespace plg {

/// Convex polygon with vertices in counter-clockwise order.
using Polygon = std::vector<Point2>;

struct Affine {
  Mat2 lin = Mat2::identity();
  Point2 trans{0, 0};

  Point2 operator()(const Point2& p) const {
    return {lin.a * p.x + lin.b * p.y + trans.x, lin.c * p.x + lin.d * p.y + trans.y};
  }
  bool is_identity() const { return lin.is_identity() && trans == Point2{0, 0}; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// x -> f(g(x)).
Affine compose_affine(const Affine& f, const Affine& g);
/// Throws PreconditionError for singular linear parts.
Affine inverse_affine(const Affine& f);
/// The affine map sending u[i] to v[i]; u must not be collinear.
Affine affine_from_triangles(const Point2 (&u)[3], const Point2 (&v)[3]);

/// Signed area (positive for counter-clockwise order).
Rational signed_area(const Polygon& p);

/// Removes repeated and collinear vertices and rotates so the
/// lexicographically smallest vertex comes first.
Polygon normalize(Polygon p);

/// Counter-clockwise, strictly convex after normalization, positive area.
bool is_convex_ccw(const Polygon& p);

/// Closed containment.
bool contains(const Polygon& p, const Point2& x);
/// Open containment.
bool contains_interior(const Polygon& p, const Point2& x);

/// Intersection of two convex polygons; empty when it has no area.
Polygon clip(const Polygon& subject, const Polygon& window);

/// Image under an orientation-preserving affine map.
Polygon map_polygon(const Affine& f, const Polygon& p);

struct BBox {
  Rational x0, y0, x1, y1;
};
BBox bbox(const Polygon& p);
/// Closed boxes share a point.
bool overlaps(const BBox& a, const BBox& b);

/// The common part of two segments lying on one line, when it has
/// positive length.
std::optional<std::pair<Point2, Point2>> collinear_overlap(const Point2& a0, const Point2& a1,
                                                           const Point2& b0, const Point2& b1);

}  // namespace plg
