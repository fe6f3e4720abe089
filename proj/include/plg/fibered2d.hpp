#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plg/certificate.hpp"
#include "plg/pl1d.hpp"
#include "plg/point2.hpp"
#include "plg/word.hpp"

namespace plg {

/// One vertical slab [x_i, x_{i+1}] x I. Breakline j is the affine function
/// with value lo[j] at x_i and hi[j] at x_{i+1}; lines 0 and r are the bottom
/// and top edges. Cell j (between lines j and j+1) is stretched by slopes[j]
/// in the vertical direction.
struct Slab {
  std::vector<Rational> lo, hi, slopes;
  friend bool operator==(const Slab&, const Slab&) = default;
};

/// A PL homeomorphism of the square preserving every vertical leaf {x} x I.
/// On cell j of a slab the map is (x,t) -> (x, m_j(x) + s_j (t - l_j(x))) with
/// image lines m_0 = 0, m_{j+1} = m_j + s_j (l_{j+1} - l_j). Stored
/// canonically: no removable breaklines and no mergeable slabs, so structural
/// equality is equality of maps.
class FiberedMap2D {
 public:
  /// The identity.
  FiberedMap2D();

  /// Validates and canonicalizes. ValidationError codes: "OrderingViolation",
  /// "TopBoundaryViolation", "ContinuityViolation".
  static FiberedMap2D make(std::vector<Rational> x_breaks, std::vector<Slab> slabs);

  const std::vector<Rational>& x_breaks() const noexcept { return xs_; }
  const std::vector<Slab>& slabs() const noexcept { return slabs_; }
  bool is_identity() const noexcept { return slabs_.size() == 1 && slabs_[0].slopes.size() == 1; }

  /// Throws DomainError outside the square.
  Point2 operator()(const Point2& p) const;

  friend bool operator==(const FiberedMap2D&, const FiberedMap2D&) = default;

 private:
  FiberedMap2D(std::vector<Rational> xs, std::vector<Slab> slabs)
      : xs_(std::move(xs)), slabs_(std::move(slabs)) {}
  std::vector<Rational> xs_;
  std::vector<Slab> slabs_;
};

inline FiberedMap2D make_fibered(std::vector<Rational> x_breaks, std::vector<Slab> slabs) {
  return FiberedMap2D::make(std::move(x_breaks), std::move(slabs));
}
inline Point2 eval_fibered(const FiberedMap2D& f, const Point2& p) { return f(p); }

/// id x h.
FiberedMap2D product_map(const PLMap1D& h);

/// The PL(I) map induced on the leaf {x} x I.
PLMap1D fiber_restriction(const FiberedMap2D& f, const Rational& x);

/// (x,t) -> f(g(x,t)).
FiberedMap2D compose_fibered(const FiberedMap2D& f, const FiberedMap2D& g);
FiberedMap2D invert_fibered(const FiberedMap2D& f);

/// Leaf-direction bump: moves y to (y.x, y.y + t), is the identity outside the
/// diamond with vertices (a, y.y), (y.x, lo), (b, y.y), (y.x, hi), and affine
/// on each triangle of it. Requires a < y.x < b inside [0,1] and
/// 0 <= lo < min(y.y, y.y+t), max(y.y, y.y+t) < hi <= 1.
FiberedMap2D vertical_bump(const Rational& a, const Rational& b, const Point2& y,
                           const Rational& t, const Rational& lo = 0, const Rational& hi = 1);

/// x-interval open relative to [0,1]: lo = 0 includes 0 and hi = 1 includes 1.
struct Strip {
  Rational lo, hi;
  bool contains(const Rational& x) const {
    return (lo < x || (lo == 0 && x == 0)) && (x < hi || (hi == 1 && x == 1));
  }
  friend bool operator==(const Strip&, const Strip&) = default;
};

/// The maximal strip around x on which f is the identity on every leaf.
std::optional<Strip> identity_strip(const FiberedMap2D& f, const Rational& x);

/// Closed bounding box [x0,x1] x [t0,t1] of the support, or nullopt for the
/// identity.
struct Box {
  Rational x0, x1, t0, t1;
};
std::optional<Box> support_box(const FiberedMap2D& f);

struct StripIdentityWitness {
  Word word;
  Strip strip;
};

/// Searches words of length <= max_len that are the identity on a strip
/// around the leaf at x: first single words trivial on the leaf, then
/// commutators of two such words.
std::optional<StripIdentityWitness> neighborhood_identity_word(const FiberedMap2D& f,
                                                               const FiberedMap2D& g,
                                                               const Rational& x, int max_len);

/// Sweeps strip witnesses across [0,1] and merges them by commutators into a
/// single nontrivial relation. Yields RelationCert or Inconclusive; this module
/// never issues FreeCert.
Certificate find_relation_fibered(const FiberedMap2D& f, const FiberedMap2D& g, int max_len);

VerifyReport verify_fibered_certificate(const nlohmann::json& cert, const FiberedMap2D& f,
                                        const FiberedMap2D& g);

struct FiberedOps {
  using element_type = FiberedMap2D;
  FiberedMap2D identity() const { return FiberedMap2D(); }
  FiberedMap2D compose(const FiberedMap2D& f, const FiberedMap2D& g) const {
    return compose_fibered(f, g);
  }
  FiberedMap2D invert(const FiberedMap2D& f) const { return invert_fibered(f); }
  bool equals(const FiberedMap2D& f, const FiberedMap2D& g) const { return f == g; }
};

}  // namespace plg
