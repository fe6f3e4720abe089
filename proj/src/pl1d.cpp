#include "plg/pl1d.hpp"

#include <algorithm>
#include <random>

#include "plg/errors.hpp"

namespace plg {

namespace {

bool collinear(const BreakPoint& p, const BreakPoint& q, const BreakPoint& r) {
  return (q.y - p.y) * (r.x - q.x) == (r.y - q.y) * (q.x - p.x);
}

std::vector<BreakPoint> prune_collinear(std::vector<BreakPoint> pts) {
  std::vector<BreakPoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) out.pop_back();
    out.push_back(std::move(p));
  }
  return out;
}

// Index i of the piece [x_i, x_{i+1}] containing x (the left one at breakpoints).
std::size_t piece_index(const std::vector<BreakPoint>& pts, const Rational& x) {
  auto it = std::lower_bound(pts.begin() + 1, pts.end(), x,
                             [](const BreakPoint& p, const Rational& v) { return p.x < v; });
  return static_cast<std::size_t>(it - pts.begin()) - 1;
}

Rational interpolate(const BreakPoint& p, const BreakPoint& q, const Rational& x) {
  if (x == p.x) return p.y;
  if (x == q.x) return q.y;
  return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
}

}  // namespace

PLMap1D::PLMap1D() : pts_{{0, 0}, {1, 1}} {}

PLMap1D PLMap1D::make(std::vector<BreakPoint> pts) {
  if (pts.size() < 2 || pts.front().x != 0 || pts.front().y != 0 || pts.back().x != 1 ||
      pts.back().y != 1) {
    throw ValidationError("EndpointViolation", "breakpoints must start at (0,0) and end at (1,1)");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x) || !(pts[i - 1].y < pts[i].y)) {
      throw ValidationError("NonMonotone", "breakpoint coordinates must strictly increase");
    }
  }
  return PLMap1D(prune_collinear(std::move(pts)));
}

Rational PLMap1D::operator()(const Rational& x) const {
  if (x < 0 || x > 1) throw DomainError("eval_pl outside [0,1]: " + x.str());
  std::size_t i = piece_index(pts_, x);
  return interpolate(pts_[i], pts_[i + 1], x);
}

Rational PLMap1D::preimage(const Rational& y) const {
  if (y < 0 || y > 1) throw DomainError("preimage outside [0,1]: " + y.str());
  auto it = std::lower_bound(pts_.begin() + 1, pts_.end(), y,
                             [](const BreakPoint& p, const Rational& v) { return p.y < v; });
  std::size_t i = static_cast<std::size_t>(it - pts_.begin()) - 1;
  BreakPoint p{pts_[i].y, pts_[i].x}, q{pts_[i + 1].y, pts_[i + 1].x};
  return interpolate(p, q, y);
}

std::string PLMap1D::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + pts_[i].x.str() + "," + pts_[i].y.str() + ")";
  }
  return s + "]";
}

PLMap1D compose_pl(const PLMap1D& f, const PLMap1D& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  const auto& gp = g.breakpoints();
  const auto& fp = f.breakpoints();
  // Walk the merged sorted list of g's y-values and f's x-values.
  std::vector<BreakPoint> out;
  out.reserve(gp.size() + fp.size());
  std::size_t i = 0, j = 0;
  std::size_t gi = 0, fj = 0;  // current pieces of g (by y) and f (by x)
  while (i < gp.size() || j < fp.size()) {
    Rational v;
    Rational x;
    if (j == fp.size() || (i < gp.size() && gp[i].y <= fp[j].x)) {
      v = gp[i].y;
      x = gp[i].x;
      if (j < fp.size() && fp[j].x == v) ++j;
      ++i;
    } else {
      v = fp[j].x;
      while (gi + 1 < gp.size() && gp[gi + 1].y < v) ++gi;
      const auto& p = gp[gi];
      const auto& q = gp[gi + 1];
      x = p.x + (q.x - p.x) * (v - p.y) / (q.y - p.y);
      ++j;
    }
    while (fj + 1 < fp.size() && fp[fj + 1].x < v) ++fj;
    Rational y = interpolate(fp[fj], fp[fj + 1], v);
    out.push_back({std::move(x), std::move(y)});
  }
  return PLMap1D::make(std::move(out));
}

PLMap1D invert_pl(const PLMap1D& f) {
  std::vector<BreakPoint> out;
  out.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) out.push_back({p.y, p.x});
  return PLMap1D::make(std::move(out));
}

SupportFix support_fix(const PLMap1D& f) {
  const auto& pts = f.breakpoints();
  std::vector<Interval> moved, fixed;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[i + 1];
    Rational dp = p.y - p.x, dq = q.y - q.x;
    if (dp.is_zero()) fixed.push_back({p.x, p.x});
    if (dq.is_zero()) fixed.push_back({q.x, q.x});
    if (dp.is_zero() && dq.is_zero()) {
      fixed.push_back({p.x, q.x});
      continue;
    }
    moved.push_back({p.x, q.x});
    if (dp.sign() * dq.sign() < 0) {
      // the piece crosses the diagonal once
      Rational c = p.x + (q.x - p.x) * dp / (dp - dq);
      fixed.push_back({c, c});
    }
  }
  return {IntervalSet(std::move(moved)), IntervalSet(std::move(fixed))};
}

IntervalSet image(const PLMap1D& f, const IntervalSet& s) {
  std::vector<Interval> out;
  for (const auto& c : s.components()) out.push_back({f(c.lo), f(c.hi)});
  return IntervalSet(std::move(out));
}

OneSidedSlopes slopes_at(const PLMap1D& f, const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("slopes_at outside [0,1]: " + x.str());
  const auto& pts = f.breakpoints();
  auto slope = [&](std::size_t i) {
    return (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
  };
  OneSidedSlopes out;
  std::size_t i = piece_index(pts, x);
  if (x > 0) out.left = slope(i);
  if (x < 1) out.right = x == pts[i + 1].x ? slope(i + 1) : slope(i);
  return out;
}

PLMap1D bump_pl(const Rational& a, const Rational& b, const Rational& y, const Rational& t) {
  Rational lo = min(y, y + t), hi = max(y, y + t);
  if (t.is_zero() || a < 0 || !(a < lo) || !(hi < b) || b > 1) {
    throw PreconditionError("bump_pl needs 0 <= a < min(y,y+t), max(y,y+t) < b <= 1, t != 0");
  }
  std::vector<BreakPoint> pts{{0, 0}};
  if (a > 0) pts.push_back({a, a});
  pts.push_back({y, y + t});
  if (b < 1) pts.push_back({b, b});
  pts.push_back({1, 1});
  return PLMap1D::make(std::move(pts));
}

bool maps_closure_into(const PLMap1D& f, const Interval& u, const Interval& v) {
  return v.lo <= f(u.lo) && f(u.hi) <= v.hi;
}

PLMap1D random_pl(std::uint64_t seed, int n_breaks, int denom_bound) {
  if (n_breaks < 0 || denom_bound < 2) {
    throw PreconditionError("random_pl needs n_breaks >= 0 and denom_bound >= 2");
  }
  std::mt19937_64 rng(seed);
  // modulo reduction keeps the stream identical across standard libraries
  auto uniform = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto sample = [&]() {
    std::vector<Rational> v;
    for (int attempt = 0; attempt < 8 * n_breaks + 8 && static_cast<int>(v.size()) < n_breaks;
         ++attempt) {
      long q = uniform(2, denom_bound);
      long p = uniform(1, q - 1);
      Rational r(p, q);
      if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<Rational> xs = sample(), ys = sample();
  std::size_t n = std::min(xs.size(), ys.size());
  std::vector<BreakPoint> pts{{0, 0}};
  for (std::size_t i = 0; i < n; ++i) pts.push_back({xs[i], ys[i]});
  pts.push_back({1, 1});
  return PLMap1D::make(std::move(pts));
}

}  // namespace plg
