#pragma once

#include <compare>
#include <string>

#include "plg/mat2.hpp"
#include "plg/rational.hpp"

namespace plg {

/// A point of the rational projective line: a rational number or infinity.
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(Rational x) : x_(std::move(x)) {}  // NOLINT: finite points embed implicitly
  template <std::integral I>
  ProjPoint(I n) : x_(n) {}  // NOLINT
  static ProjPoint infinity() {
    ProjPoint p;
    p.inf_ = true;
    return p;
  }
  /// [p : q]; throws PreconditionError when both vanish.
  static ProjPoint homogeneous(const Rational& p, const Rational& q);
  /// "inf" or a rational.
  static ProjPoint parse(const std::string& s);

  bool is_inf() const noexcept { return inf_; }
  /// The finite coordinate; meaningless for infinity.
  const Rational& x() const noexcept { return x_; }

  std::string str() const { return inf_ ? "inf" : x_.str(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.x_ == b.x_);
  }
  /// Rationals in their order, infinity last.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.x_ <=> b.x_;
  }

 private:
  Rational x_;
  bool inf_ = false;
};

/// Action of [[a,b],[c,d]] by z -> (a z + b) / (c z + d). Throws
/// PreconditionError for singular matrices.
ProjPoint mobius(const Mat2& m, const ProjPoint& z);

/// Position of z when walking the circle in the positive direction
/// (increasing, through infinity) starting at s; s itself is first.
struct CyclicRank {
  bool wrapped;
  ProjPoint z;
  friend auto operator<=>(const CyclicRank&, const CyclicRank&) = default;
};
inline CyclicRank cyclic_rank(const ProjPoint& s, const ProjPoint& z) { return {z < s, z}; }

/// The arc traversed in the positive direction from `from` to `to`.
struct ProjArc {
  ProjPoint from, to;
  bool from_closed = false, to_closed = false;

  bool contains(const ProjPoint& z) const;
  bool contains_interior(const ProjPoint& z) const;
  /// A rational or infinite point of the open arc.
  ProjPoint interior_point() const;
  std::string str() const;
  friend bool operator==(const ProjArc&, const ProjArc&) = default;
};

/// Throws PreconditionError when from == to.
ProjArc make_arc(ProjPoint from, ProjPoint to, bool from_closed, bool to_closed);

bool arc_subset(const ProjArc& a, const ProjArc& b);
bool interiors_disjoint(const ProjArc& a, const ProjArc& b);
/// No common point at all.
bool arcs_disjoint(const ProjArc& a, const ProjArc& b);

}  // namespace plg
