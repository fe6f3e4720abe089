#include "plg/pa2d.hpp"

#include <algorithm>

#include "plg/errors.hpp"

namespace plg {

namespace {

const Polygon kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

bool in_square(const Point2& p) { return p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1; }

// Both endpoints on one side of the square.
bool on_common_side(const Point2& a, const Point2& b) {
  return (a.x == 0 && b.x == 0) || (a.x == 1 && b.x == 1) || (a.y == 0 && b.y == 0) ||
         (a.y == 1 && b.y == 1);
}

bool vertex_less(const Polygon& a, const Polygon& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Point2& u, const Point2& v) { return u.x < v.x || (u.x == v.x && u.y < v.y); });
}

// Union of two convex cells sharing the edge p[i] -> p[i+1] = q[j+1] -> q[j],
// if convex.
std::optional<Polygon> merge_along_edge(const Polygon& p, const Polygon& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p[(i + 1) % p.size()];
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] != b || q[(j + 1) % q.size()] != a) continue;
      Polygon u;
      for (std::size_t k = 1; k <= p.size(); ++k) u.push_back(p[(i + k) % p.size()]);
      for (std::size_t k = 2; k < q.size(); ++k) u.push_back(q[(j + k) % q.size()]);
      u = normalize(std::move(u));
      if (is_convex_ccw(u)) return u;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Cell> canonicalize(std::vector<Cell> cells) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < cells.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < cells.size() && !merged; ++j) {
        if (!(cells[i].map == cells[j].map)) continue;
        if (auto u = merge_along_edge(cells[i].poly, cells[j].poly)) {
          cells[i].poly = std::move(*u);
          cells.erase(cells.begin() + static_cast<long>(j));
          merged = true;
        }
      }
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return vertex_less(a.poly, b.poly); });
  return cells;
}

[[noreturn]] void fail(const char* code, const std::string& what) {
  throw ValidationError(code, what);
}

void validate(const std::vector<Cell>& cells) {
  Rational area, image_area;
  std::vector<BBox> boxes, image_boxes;
  std::vector<Polygon> images;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (!is_convex_ccw(c.poly)) fail("SubdivisionViolation", "cell " + std::to_string(i) + " is not a convex polygon");
    for (const auto& v : c.poly) {
      if (!in_square(v)) fail("SubdivisionViolation", "cell " + std::to_string(i) + " leaves the square");
    }
    if (c.map.lin.det().sign() <= 0) {
      fail("OrientationViolation", "cell " + std::to_string(i) + " has det <= 0");
    }
    area += signed_area(c.poly);
    boxes.push_back(bbox(c.poly));
    images.push_back(map_polygon(c.map, c.poly));
    for (const auto& v : images.back()) {
      if (!in_square(v)) fail("BoundaryViolation", "cell " + std::to_string(i) + " is mapped outside the square");
    }
    image_boxes.push_back(bbox(images.back()));
    image_area += signed_area(images.back());
    for (std::size_t k = 0; k < c.poly.size(); ++k) {
      const Point2& a = c.poly[k];
      const Point2& b = c.poly[(k + 1) % c.poly.size()];
      if (on_common_side(a, b) && !on_common_side(c.map(a), c.map(b))) {
        fail("BoundaryViolation", "a boundary edge of cell " + std::to_string(i) + " is mapped inside");
      }
    }
  }
  if (area != 1) fail("SubdivisionViolation", "cells have total area " + area.str());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (overlaps(boxes[i], boxes[j])) {
        const Polygon& p = cells[i].poly;
        const Polygon& q = cells[j].poly;
        if (!clip(p, q).empty()) fail("SubdivisionViolation", "cells overlap");
        for (std::size_t a = 0; a < p.size(); ++a) {
          for (std::size_t b = 0; b < q.size(); ++b) {
            auto seg = collinear_overlap(p[a], p[(a + 1) % p.size()], q[b], q[(b + 1) % q.size()]);
            if (!seg) continue;
            if (cells[i].map(seg->first) != cells[j].map(seg->first) ||
                cells[i].map(seg->second) != cells[j].map(seg->second)) {
              fail("ContinuityViolation", "cells " + std::to_string(i) + " and " +
                                              std::to_string(j) + " disagree on a shared edge");
            }
          }
        }
      }
      if (overlaps(image_boxes[i], image_boxes[j]) && !clip(images[i], images[j]).empty()) {
        fail("ImageOverlap", "images of cells " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  if (image_area != 1) fail("ImageOverlap", "images have total area " + image_area.str());
}

}  // namespace

PAMap2D::PAMap2D() : cells_{Cell{kSquare, Affine{}}} {}

PAMap2D PAMap2D::trusted(std::vector<Cell> cells) { return PAMap2D(canonicalize(std::move(cells))); }

PAMap2D PAMap2D::make(std::vector<Cell> cells) {
  for (auto& c : cells) {
    if (signed_area(c.poly).sign() < 0) std::reverse(c.poly.begin(), c.poly.end());
    Polygon n = normalize(c.poly);
    if (n.empty()) fail("SubdivisionViolation", "degenerate cell");
    c.poly = std::move(n);
  }
  validate(cells);
  return PAMap2D(canonicalize(std::move(cells)));
}

bool PAMap2D::is_identity() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.map.is_identity(); });
}

Point2 PAMap2D::operator()(const Point2& p) const {
  if (!in_square(p)) throw DomainError("point outside the square");
  for (const auto& c : cells_) {
    if (contains(c.poly, p)) return c.map(p);
  }
  throw InternalInconsistency("no cell contains a point of the square");
}

void validate_pa(const PAMap2D& f) { validate(f.cells()); }

PAMap2D compose_pa(const PAMap2D& f, const PAMap2D& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  std::vector<Cell> out;
  std::vector<BBox> fboxes;
  for (const auto& d : f.cells()) fboxes.push_back(bbox(d.poly));
  for (const auto& c : g.cells()) {
    Polygon img = map_polygon(c.map, c.poly);
    BBox ib = bbox(img);
    Affine back = inverse_affine(c.map);
    for (std::size_t k = 0; k < f.cells().size(); ++k) {
      if (!overlaps(ib, fboxes[k])) continue;
      Polygon piece = clip(img, f.cells()[k].poly);
      if (piece.empty()) continue;
      out.push_back({map_polygon(back, piece), compose_affine(f.cells()[k].map, c.map)});
    }
  }
  return PAMap2D::trusted(std::move(out));
}

PAMap2D invert_pa(const PAMap2D& f) {
  std::vector<Cell> out;
  for (const auto& c : f.cells()) out.push_back({map_polygon(c.map, c.poly), inverse_affine(c.map)});
  return PAMap2D::trusted(std::move(out));
}

bool equivalent(const PAMap2D& f, const PAMap2D& g) {
  for (const auto& c : f.cells()) {
    BBox b = bbox(c.poly);
    for (const auto& d : g.cells()) {
      if (c.map == d.map || !overlaps(b, bbox(d.poly))) continue;
      if (!clip(c.poly, d.poly).empty()) return false;
    }
  }
  return true;
}

Rational total_area(const PAMap2D& f) {
  Rational a;
  for (const auto& c : f.cells()) a += signed_area(c.poly);
  return a;
}

Mat2 linear_part_at(const PAMap2D& f, const Point2& p) {
  if (!in_square(p)) throw DomainError("point outside the square");
  const Affine* first = nullptr;
  for (const auto& c : f.cells()) {
    if (!contains(c.poly, p)) continue;
    if (!first) {
      first = &c.map;
    } else if (!(*first == c.map)) {
      throw NotLocallyAffine("cells meeting at the point carry different affine maps");
    }
  }
  if (!first) throw InternalInconsistency("no cell contains a point of the square");
  return first->lin;
}

namespace {

constexpr int kMaxHalvings = 64;

Point2 corner(const Point2& p, const Rational& r, int k) {
  static const int sx[4] = {-1, 1, 1, -1}, sy[4] = {-1, -1, 1, 1};
  return {p.x + r * sx[k], p.y + r * sy[k]};
}

bool positive_triangle(const Point2& a, const Point2& b, const Point2& c) {
  return orient(a, b, c).sign() > 0;
}

// Annulus cells for inner radius r, or nullopt if some trapezoid admits no
// positively oriented split.
std::optional<std::vector<Cell>> annulus(const Affine& a, const Point2& p, const Rational& R,
                                         const Rational& r) {
  Point2 o[4], in[4], img[4];
  for (int k = 0; k < 4; ++k) {
    o[k] = corner(p, R, k);
    in[k] = corner(p, r, k);
    img[k] = a(in[k]);
  }
  Polygon outer{o[0], o[1], o[2], o[3]};
  for (const auto& v : img) {
    if (!contains_interior(outer, v)) return std::nullopt;
  }
  std::vector<Cell> cells;
  for (int k = 0; k < 4; ++k) {
    int n = (k + 1) % 4;
    // diagonal o[k]-in[n] first, then o[n]-in[k]
    Point2 t1[3] = {o[k], o[n], in[n]}, t1i[3] = {o[k], o[n], img[n]};
    Point2 t2[3] = {o[k], in[n], in[k]}, t2i[3] = {o[k], img[n], img[k]};
    if (!(positive_triangle(t1i[0], t1i[1], t1i[2]) && positive_triangle(t2i[0], t2i[1], t2i[2]))) {
      Point2 u1[3] = {o[k], o[n], in[k]}, u1i[3] = {o[k], o[n], img[k]};
      Point2 u2[3] = {o[n], in[n], in[k]}, u2i[3] = {o[n], img[n], img[k]};
      if (!(positive_triangle(u1i[0], u1i[1], u1i[2]) && positive_triangle(u2i[0], u2i[1], u2i[2]))) {
        return std::nullopt;
      }
      std::copy(u1, u1 + 3, t1);
      std::copy(u1i, u1i + 3, t1i);
      std::copy(u2, u2 + 3, t2);
      std::copy(u2i, u2i + 3, t2i);
    }
    cells.push_back({Polygon(t1, t1 + 3), affine_from_triangles(t1, t1i)});
    cells.push_back({Polygon(t2, t2 + 3), affine_from_triangles(t2, t2i)});
  }
  return cells;
}

}  // namespace

PAMap2D prescribed_derivative_homeo(const Mat2& alpha, const Point2& p, const Rational& r_out) {
  if (alpha.det().sign() <= 0) throw PreconditionError("prescribed derivative needs det > 0");
  if (r_out.sign() <= 0 || !(p.x - r_out > 0) || !(p.x + r_out < 1) || !(p.y - r_out > 0) ||
      !(p.y + r_out < 1)) {
    throw PreconditionError("outer square must lie inside the open unit square");
  }
  if (alpha.is_identity()) return PAMap2D();
  Affine a{alpha, {0, 0}};
  a.trans = p - a(p);
  const Rational& R = r_out;
  Rational r = R / 2;
  for (int i = 0; i < kMaxHalvings; ++i, r /= 2) {
    auto ann = annulus(a, p, R, r);
    if (!ann) continue;
    std::vector<Cell> cells = std::move(*ann);
    cells.push_back({{corner(p, r, 0), corner(p, r, 1), corner(p, r, 2), corner(p, r, 3)}, a});
    Rational x0 = p.x - R, x1 = p.x + R, y0 = p.y - R, y1 = p.y + R;
    cells.push_back({{{0, 0}, {1, 0}, {1, y0}, {0, y0}}, Affine{}});
    cells.push_back({{{0, y1}, {1, y1}, {1, 1}, {0, 1}}, Affine{}});
    cells.push_back({{{0, y0}, {x0, y0}, {x0, y1}, {0, y1}}, Affine{}});
    cells.push_back({{{x1, y0}, {1, y0}, {1, y1}, {x1, y1}}, Affine{}});
    return PAMap2D::make(std::move(cells));
  }
  throw InternalInconsistency("no inner radius gives a positively oriented annulus");
}

DerivativeCheck derivative_check(const PAMap2D& f, const PAMap2D& g, const Mat2& alpha,
                                 const Mat2& beta, const Point2& p, int max_len) {
  struct Node {
    Word w;
    PAMap2D map;
    Mat2 mat;
  };
  const std::vector<Letter> letters{Letter::A, Letter::AInv, Letter::B, Letter::BInv};
  std::vector<Node> gens;
  for (Letter l : letters) {
    bool a = generator(l) == 0, pos = sign(l) > 0;
    const PAMap2D& base = a ? f : g;
    const Mat2& m = a ? alpha : beta;
    gens.push_back({Word::letter(l), pos ? base : invert_pa(base), pos ? m : m.inverse()});
  }
  DerivativeCheck out;
  auto check = [&](const Node& n) {
    ++out.words_checked;
    if (n.mat.is_identity()) out.identity_words.push_back(n.w);
    try {
      if (linear_part_at(n.map, p) != n.mat) out.mismatches.push_back(n.w);
    } catch (const NotLocallyAffine&) {
      out.mismatches.push_back(n.w);
    }
  };
  std::vector<Node> level;
  if (max_len >= 1) level = gens;
  for (const Node& n : level) check(n);
  for (int len = 2; len <= max_len; ++len) {
    std::vector<Node> next;
    for (const Node& l : gens) {
      for (const Node& u : level) {
        if (u.w.letters()[0] == inverse(l.w.letters()[0])) continue;
        next.push_back({l.w * u.w, compose_pa(l.map, u.map), l.mat * u.mat});
        check(next.back());
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace plg
