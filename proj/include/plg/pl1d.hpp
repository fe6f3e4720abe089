#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plg/interval_set.hpp"
#include "plg/rational.hpp"

namespace plg {

struct BreakPoint {
  Rational x, y;
  friend bool operator==(const BreakPoint&, const BreakPoint&) = default;
};

/// An orientation-preserving PL homeomorphism of [0,1], stored as its
/// canonical breakpoint list: (0,0) first, (1,1) last, both coordinates
/// strictly increasing, and no interior breakpoint collinear with its
/// neighbours. Structural equality is therefore group equality.
class PLMap1D {
 public:
  /// The identity.
  PLMap1D();

  /// Validates and canonicalizes. Throws ValidationError with code
  /// "EndpointViolation" or "NonMonotone".
  static PLMap1D make(std::vector<BreakPoint> pts);

  const std::vector<BreakPoint>& breakpoints() const noexcept { return pts_; }
  bool is_identity() const noexcept { return pts_.size() == 2; }

  /// Throws DomainError outside [0,1].
  Rational operator()(const Rational& x) const;
  /// Inverse image of y; throws DomainError outside [0,1].
  Rational preimage(const Rational& y) const;

  friend bool operator==(const PLMap1D&, const PLMap1D&) = default;

  std::string str() const;

 private:
  explicit PLMap1D(std::vector<BreakPoint> canonical) : pts_(std::move(canonical)) {}
  std::vector<BreakPoint> pts_;
};

inline PLMap1D make_pl(std::vector<BreakPoint> pts) { return PLMap1D::make(std::move(pts)); }
inline Rational eval_pl(const PLMap1D& f, const Rational& x) { return f(x); }

/// x -> f(g(x)).
PLMap1D compose_pl(const PLMap1D& f, const PLMap1D& g);
PLMap1D invert_pl(const PLMap1D& f);

struct SupportFix {
  IntervalSet support;  // closure of {x : f(x) != x}
  IntervalSet fixed;    // isolated fixed points appear as degenerate intervals
};
SupportFix support_fix(const PLMap1D& f);
inline IntervalSet support(const PLMap1D& f) { return support_fix(f).support; }

/// f applied to every endpoint; f is increasing so this is the image set.
IntervalSet image(const PLMap1D& f, const IntervalSet& s);

struct OneSidedSlopes {
  std::optional<Rational> left, right;
};
OneSidedSlopes slopes_at(const PLMap1D& f, const Rational& x);

/// The map through (0,0), (a,a), (y,y+t), (b,b), (1,1).
/// Requires 0 <= a < min(y, y+t), max(y, y+t) < b <= 1 and t != 0.
PLMap1D bump_pl(const Rational& a, const Rational& b, const Rational& y, const Rational& t);

/// f([u.lo,u.hi]) is contained in [v.lo,v.hi].
bool maps_closure_into(const PLMap1D& f, const Interval& u, const Interval& v);

/// Deterministic random map with at most n_breaks interior breakpoints whose
/// coordinates have denominators <= denom_bound.
PLMap1D random_pl(std::uint64_t seed, int n_breaks, int denom_bound);

/// GroupOps for PL(I).
struct PL1DOps {
  using element_type = PLMap1D;
  PLMap1D identity() const { return PLMap1D(); }
  PLMap1D compose(const PLMap1D& f, const PLMap1D& g) const { return compose_pl(f, g); }
  PLMap1D invert(const PLMap1D& f) const { return invert_pl(f); }
  bool equals(const PLMap1D& f, const PLMap1D& g) const { return f == g; }
};

}  // namespace plg
