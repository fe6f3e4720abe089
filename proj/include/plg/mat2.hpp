#pragma once

#include <array>
#include <string>

#include "plg/rational.hpp"

namespace plg {

/// 2x2 rational matrix [[a, b], [c, d]].
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }
  /// Throws PreconditionError for singular matrices.
  Mat2 inverse() const;
  /// Adjugate: inverse up to the scalar det.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  bool is_identity() const { return *this == identity(); }
  /// True for lambda * I with lambda != 0.
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d && !a.is_zero(); }

  /// Canonical representative of the projective class: primitive integer
  /// entries with the first nonzero entry positive.
  Mat2 projective_normal() const;

  std::string str() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const Rational& s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline bool projectively_equal(const Mat2& x, const Mat2& y) {
  return x.projective_normal() == y.projective_normal();
}

/// GroupOps for GL(2,Q); equality is exact matrix equality.
struct Mat2Ops {
  using element_type = Mat2;
  Mat2 identity() const { return Mat2::identity(); }
  Mat2 compose(const Mat2& x, const Mat2& y) const { return x * y; }
  Mat2 invert(const Mat2& x) const { return x.inverse(); }
  bool equals(const Mat2& x, const Mat2& y) const { return x == y; }
};

}  // namespace plg
