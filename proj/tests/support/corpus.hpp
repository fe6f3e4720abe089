#pragma once

// Constructed instances shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <utility>

#include "plg/fibered2d.hpp"
#include "plg/pl1d.hpp"
#include "plg/projcircle.hpp"

namespace plg::corpus {

/// Sends 0 to u and infinity to v (finite u < v).
inline Mat2 chart(const Rational& u, const Rational& v) { return {v, u, 1, 1}; }

/// Full-support contraction towards 0 and an interior bump.
inline std::pair<PLMap1D, PLMap1D> bs_pair(std::mt19937_64& rng) {
  auto pick = [&](long lo, long hi, long den) {
    return Rational(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)), den);
  };
  Rational x = pick(4, 12, 16), y = x / pick(2, 6, 1);
  PLMap1D f = make_pl({{0, 0}, {x, y}, {1, 1}});
  Rational a = pick(2, 6, 16), b = a + pick(2, 5, 16);
  Rational c = midpoint(a, b);
  Rational t = (b - c) / pick(2, 5, 1);
  if (rng() % 2 == 0) t = -t;
  return {f, bump_pl(a, b, c, t)};
}

/// Projective pair fixing the arc [1, 0] through infinity: a hyperbolic map
/// on [0,1] and a two-piece bump on [p,q] inside it, optionally moved by a
/// global Mobius map k.
struct HPair {
  ProjCircleMap f, g;
  ProjArc arc;
};

inline HPair h_pair(std::mt19937_64& rng, bool move) {
  static const Rational lams[4] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4)};
  Rational lam = lams[rng() % 4];
  ProjCircleMap f = make_proj({0, 1}, {Mat2{lam, 0, lam - 1, 1}, Mat2::identity()});
  Rational p(1 + static_cast<long>(rng() % 3), 8), q = 1 - Rational(1 + static_cast<long>(rng() % 3), 8);
  Rational r = midpoint(p, q), r2 = midpoint(r, rng() % 2 == 0 ? p : q);
  Mat2 m1 = chart(p, r2) * chart(p, r).inverse();
  Mat2 m2 = chart(r2, q) * chart(r, q).inverse();
  ProjCircleMap g = make_proj({p, r, q}, {m1, m2, Mat2::identity()});
  ProjArc arc = make_arc(1, 0, true, true);
  if (!move) return {f, g, arc};
  Mat2 k;
  do {
    auto e = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
    k = Mat2{e(), e(), e(), e()};
  } while (k.det().sign() <= 0);
  ProjCircleMap kk = ProjCircleMap::global(k), ki = ProjCircleMap::global(k.adjugate());
  auto conj = [&](const ProjCircleMap& x) { return compose_proj(kk, compose_proj(x, ki)); };
  ProjArc moved = make_arc(mobius(k, arc.from), mobius(k, arc.to), true, true);
  return {conj(f), conj(g), moved};
}

/// F = id x h with h contracting towards 0, and G a product of two leaf
/// bumps on the x-strips [0, 2/3] and [1/3, 1] whose t-windows lie in one
/// fundamental domain of h. On every leaf g commutes with h g h^-1.
struct FiberedPair {
  FiberedMap2D f, g;
};

inline FiberedPair fibered_pair(std::mt19937_64& rng) {
  static const Rational scales[3] = {Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  static const Rational corners[3] = {Rational(1, 2), Rational(5, 8), Rational(3, 4)};
  Rational s = scales[rng() % 3], x = corners[rng() % 3];
  PLMap1D h = make_pl({{0, 0}, {x, s * x}, {1, 1}});
  Rational lo = s * x, w = (x - s * x) / 16;
  auto window = [&](Rational& a, Rational& b) {
    long i = 1 + static_cast<long>(rng() % 7), j = i + 2 + static_cast<long>(rng() % (14 - i - 1));
    a = lo + w * i;
    b = lo + w * j;
  };
  Rational a1, b1, a2, b2;
  window(a1, b1);
  window(a2, b2);
  auto bump = [&](const Rational& xa, const Rational& xb, const Rational& a, const Rational& b) {
    Rational c = midpoint(a, b), t = (b - c) / Rational(2 + static_cast<long>(rng() % 3));
    if (rng() % 2 == 0) t = -t;
    return vertical_bump(xa, xb, {midpoint(xa, xb), c}, t, a, b);
  };
  FiberedMap2D v1 = bump(0, Rational(2, 3), a1, b1);
  FiberedMap2D v2 = bump(Rational(1, 3), 1, a2, b2);
  return {product_map(h), compose_fibered(v1, v2)};
}

}  // namespace plg::corpus
