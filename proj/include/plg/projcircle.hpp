#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plg/certificate.hpp"
#include "plg/interval_set.hpp"
#include "plg/mat2.hpp"
#include "plg/projective_line.hpp"
#include "plg/quad_surd.hpp"
#include "plg/word.hpp"

namespace plg {

/// A piecewise projective homeomorphism of the circle RP^1. Piece i acts on
/// the arc from breakpoint i to breakpoint i+1 (the last one wraps through
/// infinity back to the first). Breakpoints are sorted with infinity last,
/// matrices are stored in projective normal form and adjacent pieces are
/// never projectively equal. No breakpoints means one global Mobius map.
class ProjCircleMap {
 public:
  /// The identity.
  ProjCircleMap();

  /// Validates and canonicalizes; breakpoints[i] is the start of the arc of
  /// pieces[i]. Requires pieces.size() == max(1, breakpoints.size()).
  /// ValidationError codes: "OrientationViolation", "ContinuityViolation",
  /// "NotBijective".
  static ProjCircleMap make(std::vector<ProjPoint> breakpoints, std::vector<Mat2> pieces);
  static ProjCircleMap global(const Mat2& m) { return make({}, {m}); }

  const std::vector<ProjPoint>& breakpoints() const noexcept { return bps_; }
  const std::vector<Mat2>& pieces() const noexcept { return pieces_; }
  bool is_identity() const { return bps_.empty() && pieces_[0].is_scalar(); }

  /// Index of the piece whose arc contains z (the later one at a breakpoint).
  std::size_t piece_index(const ProjPoint& z) const;
  /// The closed arc of piece i; requires at least two breakpoints.
  ProjArc piece_arc(std::size_t i) const;

  ProjPoint operator()(const ProjPoint& z) const;

  friend bool operator==(const ProjCircleMap&, const ProjCircleMap&) = default;

 private:
  ProjCircleMap(std::vector<ProjPoint> bps, std::vector<Mat2> pieces)
      : bps_(std::move(bps)), pieces_(std::move(pieces)) {}
  std::vector<ProjPoint> bps_;
  std::vector<Mat2> pieces_;
};

inline ProjCircleMap make_proj(std::vector<ProjPoint> bps, std::vector<Mat2> pieces) {
  return ProjCircleMap::make(std::move(bps), std::move(pieces));
}
inline ProjPoint eval_proj(const ProjCircleMap& f, const ProjPoint& z) { return f(z); }

/// z -> f(g(z)).
ProjCircleMap compose_proj(const ProjCircleMap& f, const ProjCircleMap& g);
ProjCircleMap invert_proj(const ProjCircleMap& f);

/// Deterministic random map with n_breaks breakpoints (0 gives a global
/// Mobius map) and small rational data.
ProjCircleMap random_proj(std::uint64_t seed, int n_breaks);

/// A point of RP^1 with coordinate in Q(sqrt d).
struct SurdPoint {
  bool inf = false;
  QuadSurd x;
  std::string str() const { return inf ? "inf" : x.str(); }
};

/// Mobius action on quadratic-surd points.
SurdPoint mobius(const Mat2& m, const SurdPoint& z);
bool same_point(const SurdPoint& a, const SurdPoint& b);

struct FixedPointRecord {
  struct Entry {
    std::size_t piece;
    SurdPoint point;
  };
  std::vector<Entry> points;
  /// Pieces whose matrix is scalar: their whole arc is fixed.
  std::vector<std::size_t> identity_pieces;
};

/// Per piece, the roots of c x^2 + (d - a) x - b (and infinity when c = 0)
/// lying on the piece's closed arc.
FixedPointRecord fixed_points_proj(const ProjCircleMap& f);

/// True when f is the identity on the closed arc.
bool fixes_arc_pointwise(const ProjCircleMap& f, const ProjArc& arc);

/// For f, g fixing `arc` pointwise: AbelianCert if [f,g] = id, else a Z^k
/// witness family (k = 3) found in the chart z -> 1/(m - z) that sends an
/// interior point m of the arc to infinity. Never issues FreeCert. Throws
/// PreconditionError if either map moves a point of the arc.
Certificate classify_H_pair(const ProjCircleMap& f, const ProjCircleMap& g, const ProjArc& arc,
                            int depth);

VerifyReport verify_proj_certificate(const nlohmann::json& cert, const ProjCircleMap& f,
                                     const ProjCircleMap& g, const ProjArc& arc);

struct ProjOps {
  using element_type = ProjCircleMap;
  ProjCircleMap identity() const { return ProjCircleMap(); }
  ProjCircleMap compose(const ProjCircleMap& f, const ProjCircleMap& g) const {
    return compose_proj(f, g);
  }
  ProjCircleMap invert(const ProjCircleMap& f) const { return invert_proj(f); }
  bool equals(const ProjCircleMap& f, const ProjCircleMap& g) const { return f == g; }
};

}  // namespace plg
