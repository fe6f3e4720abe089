#pragma once

#include "plg/rational.hpp"

namespace plg {

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
};

inline Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
/// Twice the signed area of (a, b, c); positive when counter-clockwise.
inline Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b - a, c - a);
}

}  // namespace plg
