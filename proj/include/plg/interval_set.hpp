#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plg/rational.hpp"

namespace plg {

/// Closed interval [lo, hi]; lo == hi is an isolated point.
struct Interval {
  Rational lo, hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Open interval (lo, hi) of the unit interval.
struct OpenInterval {
  Rational lo, hi;
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Finite union of closed intervals kept sorted, disjoint and separated by
/// gaps (touching intervals are merged).
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  const std::vector<Interval>& components() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  bool contains(const Rational& x) const;
  /// The component containing x, if any.
  std::optional<Interval> component_of(const Rational& x) const;

  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet unite(const IntervalSet& o) const;
  /// Open components of [lo, hi] minus this set.
  std::vector<OpenInterval> complement_in(const Rational& lo, const Rational& hi) const;

  std::optional<Rational> min() const;
  std::optional<Rational> max() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  std::string str() const;

 private:
  std::vector<Interval> parts_;
};

/// True when the two sets share no interior point.
bool interiors_disjoint(const IntervalSet& a, const IntervalSet& b);

}  // namespace plg
