#include "plg/interval_set.hpp"

#include <algorithm>

#include "plg/errors.hpp"

namespace plg {

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  for (const auto& p : parts) {
    if (p.hi < p.lo) throw PreconditionError("interval with hi < lo");
  }
  std::sort(parts.begin(), parts.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (auto& p : parts) {
    if (!parts_.empty() && p.lo <= parts_.back().hi) {
      parts_.back().hi = plg::max(parts_.back().hi, p.hi);
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

bool IntervalSet::contains(const Rational& x) const { return component_of(x).has_value(); }

std::optional<Interval> IntervalSet::component_of(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& p) { return v < p.lo; });
  if (it == parts_.begin()) return std::nullopt;
  --it;
  if (it->contains(x)) return *it;
  return std::nullopt;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < o.parts_.size()) {
    const auto& p = parts_[i];
    const auto& q = o.parts_[j];
    Rational lo = plg::max(p.lo, q.lo), hi = plg::min(p.hi, q.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (p.hi < q.hi) ++i; else ++j;
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return IntervalSet(std::move(all));
}

std::vector<OpenInterval> IntervalSet::complement_in(const Rational& lo,
                                                     const Rational& hi) const {
  std::vector<OpenInterval> out;
  Rational cur = lo;
  for (const auto& p : parts_) {
    if (p.hi < lo) continue;
    if (p.lo > hi) break;
    if (p.lo > cur) out.push_back({cur, p.lo});
    cur = plg::max(cur, p.hi);
  }
  if (cur < hi) out.push_back({cur, hi});
  return out;
}

std::optional<Rational> IntervalSet::min() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.front().lo;
}

std::optional<Rational> IntervalSet::max() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.back().hi;
}

std::string IntervalSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ", ";
    s += "[" + parts_[i].lo.str() + ", " + parts_[i].hi.str() + "]";
  }
  return s + "}";
}

bool interiors_disjoint(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& p : a.intersect(b).components()) {
    if (!p.is_point()) return false;
  }
  return true;
}

}  // namespace plg
