#include "plg/polygon.hpp"

#include <algorithm>

#include "plg/errors.hpp"

namespace plg {

Affine compose_affine(const Affine& f, const Affine& g) { return {f.lin * g.lin, f(g.trans)}; }

Affine inverse_affine(const Affine& f) {
  Mat2 m = f.lin.inverse();
  Affine out{m, {0, 0}};
  Point2 t = out(f.trans);
  out.trans = {-t.x, -t.y};
  return out;
}

Affine affine_from_triangles(const Point2 (&u)[3], const Point2 (&v)[3]) {
  Point2 du1 = u[1] - u[0], du2 = u[2] - u[0];
  Point2 dv1 = v[1] - v[0], dv2 = v[2] - v[0];
  Mat2 src{du1.x, du2.x, du1.y, du2.y};
  Mat2 dst{dv1.x, dv2.x, dv1.y, dv2.y};
  Affine out{dst * src.inverse(), {0, 0}};
  Point2 img = out(u[0]);
  out.trans = v[0] - img;
  return out;
}

Rational signed_area(const Polygon& p) {
  Rational twice;
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p[i], p[(i + 1) % p.size()]);
  return twice / 2;
}

Polygon normalize(Polygon p) {
  bool changed = true;
  while (changed && p.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point2& prev = p[(i + p.size() - 1) % p.size()];
      const Point2& next = p[(i + 1) % p.size()];
      if (p[i] == next || orient(prev, p[i], next).is_zero()) {
        p.erase(p.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (p.size() < 3) return {};
  auto lex = [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::rotate(p.begin(), std::min_element(p.begin(), p.end(), lex), p.end());
  return p;
}

bool is_convex_ccw(const Polygon& p) {
  if (p.size() < 3) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p[(i + 1) % p.size()];
    if (orient(a, b, p[(i + 2) % p.size()]).sign() <= 0) return false;
    // rules out polygons that wind more than once
    for (const auto& v : p) {
      if (orient(a, b, v).sign() < 0) return false;
    }
  }
  return true;
}

bool contains(const Polygon& p, const Point2& x) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (orient(p[i], p[(i + 1) % p.size()], x).sign() < 0) return false;
  }
  return !p.empty();
}

bool contains_interior(const Polygon& p, const Point2& x) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (orient(p[i], p[(i + 1) % p.size()], x).sign() <= 0) return false;
  }
  return !p.empty();
}

Polygon clip(const Polygon& subject, const Polygon& window) {
  Polygon cur = subject;
  for (std::size_t i = 0; i < window.size() && !cur.empty(); ++i) {
    const Point2& a = window[i];
    const Point2& b = window[(i + 1) % window.size()];
    Polygon next;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      const Point2& p = cur[j];
      const Point2& q = cur[(j + 1) % cur.size()];
      Rational sp = orient(a, b, p), sq = orient(a, b, q);
      if (sp.sign() >= 0) next.push_back(p);
      if (sp.sign() * sq.sign() < 0) {
        Rational t = sp / (sp - sq);
        next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    cur = std::move(next);
  }
  return normalize(std::move(cur));
}

Polygon map_polygon(const Affine& f, const Polygon& p) {
  Polygon out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(f(v));
  return normalize(std::move(out));
}

BBox bbox(const Polygon& p) {
  BBox b{p[0].x, p[0].y, p[0].x, p[0].y};
  for (const auto& v : p) {
    b.x0 = min(b.x0, v.x);
    b.y0 = min(b.y0, v.y);
    b.x1 = max(b.x1, v.x);
    b.y1 = max(b.y1, v.y);
  }
  return b;
}

bool overlaps(const BBox& a, const BBox& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

std::optional<std::pair<Point2, Point2>> collinear_overlap(const Point2& a0, const Point2& a1,
                                                           const Point2& b0, const Point2& b1) {
  if (!orient(a0, a1, b0).is_zero() || !orient(a0, a1, b1).is_zero()) return std::nullopt;
  Point2 d = a1 - a0;
  auto param = [&](const Point2& p) {
    Point2 v = p - a0;
    return (v.x * d.x + v.y * d.y) / (d.x * d.x + d.y * d.y);
  };
  Rational s0 = param(b0), s1 = param(b1);
  if (s1 < s0) std::swap(s0, s1);
  Rational lo = max(Rational(0), s0), hi = min(Rational(1), s1);
  if (!(lo < hi)) return std::nullopt;
  auto at = [&](const Rational& s) { return Point2{a0.x + s * d.x, a0.y + s * d.y}; };
  return std::make_pair(at(lo), at(hi));
}

}  // namespace plg
