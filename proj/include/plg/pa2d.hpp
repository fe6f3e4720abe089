#pragma once

#include <vector>

#include "plg/polygon.hpp"
#include "plg/word.hpp"

namespace plg {

struct Cell {
  Polygon poly;
  Affine map;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A PL homeomorphism of the unit square given on a subdivision into convex
/// cells. Cells with equal affine maps that share a whole edge and have a
/// convex union are merged, and cells are sorted by vertex list.
class PAMap2D {
 public:
  /// The identity.
  PAMap2D();

  /// Validates and canonicalizes. ValidationError codes: "SubdivisionViolation"
  /// (cells not convex, outside the square, overlapping or not covering it),
  /// "OrientationViolation", "ContinuityViolation", "BoundaryViolation",
  /// "ImageOverlap".
  static PAMap2D make(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  bool is_identity() const;

  /// Throws DomainError outside the square.
  Point2 operator()(const Point2& p) const;

  friend bool operator==(const PAMap2D&, const PAMap2D&) = default;

 private:
  explicit PAMap2D(std::vector<Cell> cells) : cells_(std::move(cells)) {}
  static PAMap2D trusted(std::vector<Cell> cells);
  std::vector<Cell> cells_;

  friend PAMap2D compose_pa(const PAMap2D& f, const PAMap2D& g);
  friend PAMap2D invert_pa(const PAMap2D& f);
};

inline PAMap2D make_pa(std::vector<Cell> cells) { return PAMap2D::make(std::move(cells)); }
inline Point2 eval_pa(const PAMap2D& f, const Point2& p) { return f(p); }

/// Re-runs every validity check; throws ValidationError.
void validate_pa(const PAMap2D& f);

/// x -> f(g(x)) by overlay of the subdivisions.
PAMap2D compose_pa(const PAMap2D& f, const PAMap2D& g);
PAMap2D invert_pa(const PAMap2D& f);

/// Equal as maps (the subdivisions may differ).
bool equivalent(const PAMap2D& f, const PAMap2D& g);

/// Total area of the domain cells.
Rational total_area(const PAMap2D& f);

/// The common linear part of all cells containing p. Throws NotLocallyAffine
/// if they disagree and DomainError outside the square.
Mat2 linear_part_at(const PAMap2D& f, const Point2& p);

/// Identity outside p + r_out[-1,1]^2, equal to x -> p + alpha(x - p) on a
/// smaller concentric square, and affine on eight annulus triangles in
/// between. Requires det alpha > 0 and the outer square inside the open
/// unit square.
PAMap2D prescribed_derivative_homeo(const Mat2& alpha, const Point2& p, const Rational& r_out);

struct DerivativeCheck {
  std::size_t words_checked = 0;
  std::vector<Word> mismatches;      // linear part at p differs from w(alpha, beta)
  std::vector<Word> identity_words;  // w(alpha, beta) = I
};

/// Compares linear_part_at(w(f, g), p) with w(alpha, beta) for every
/// nonempty reduced word of length <= max_len.
DerivativeCheck derivative_check(const PAMap2D& f, const PAMap2D& g, const Mat2& alpha,
                                 const Mat2& beta, const Point2& p, int max_len);

struct PAOps {
  using element_type = PAMap2D;
  PAMap2D identity() const { return PAMap2D(); }
  PAMap2D compose(const PAMap2D& f, const PAMap2D& g) const { return compose_pa(f, g); }
  PAMap2D invert(const PAMap2D& f) const { return invert_pa(f); }
  bool equals(const PAMap2D& f, const PAMap2D& g) const { return equivalent(f, g); }
};

}  // namespace plg
