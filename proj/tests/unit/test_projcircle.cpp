#include <cstdint>
#include <random>

#include "../support/corpus.hpp"
#include "doctest.h"
#include "plg/errors.hpp"
#include "plg/json_io.hpp"
#include "plg/projcircle.hpp"

using namespace plg;

namespace {
const ProjPoint inf = ProjPoint::infinity();

ProjPoint rand_point(std::mt19937_64& rng) {
  if (rng() % 10 == 0) return inf;
  long num = static_cast<long>(rng() % 201) - 100;
  long den = 1 + static_cast<long>(rng() % 13);
  return ProjPoint(Rational(num, den));
}

ProjCircleMap rand_proj(std::mt19937_64& rng) {
  std::uint64_t seed = rng();
  return random_proj(seed, static_cast<int>(rng() % 5));
}

bool fixed(const Mat2& m, const SurdPoint& z) { return same_point(mobius(m, z), z); }
}  // namespace

TEST_CASE("construction") {
  CHECK(make_proj({}, {Mat2::identity()}).is_identity());
  CHECK(make_proj({0, 1}, {Mat2{2, 0, 0, 2}, Mat2::identity()}).is_identity());
  ProjCircleMap m = make_proj({}, {Mat2{2, 1, 1, 1}});
  CHECK(m.breakpoints().empty());
  CHECK(m(ProjPoint(1)) == ProjPoint(Rational(3, 2)));
  CHECK(m(inf) == ProjPoint(2));
  auto code = [](std::vector<ProjPoint> b, std::vector<Mat2> p) {
    try {
      make_proj(std::move(b), std::move(p));
    } catch (const ValidationError& e) {
      return e.code();
    }
    return std::string("ok");
  };
  CHECK(code({0, 1}, {Mat2{2, 0, 0, 1}, Mat2::identity()}) == "ContinuityViolation");
  CHECK(code({}, {Mat2{0, 1, 1, 0}}) == "OrientationViolation");
  // breakpoints 0, 1, 2 sent to 0, 5, 2: the image arcs wind twice
  auto piece = [](Rational b0, Rational b1, Rational c0, Rational c1, Rational lam) {
    return Mat2{c1, c0, 1, 1} * Mat2{lam, 0, 0, 1} * Mat2{b1, b0, 1, 1}.inverse();
  };
  CHECK(code({0, 1, 2}, {piece(0, 1, 0, 5, 1), piece(1, 2, 5, 2, -1), piece(2, 0, 2, 0, 1)}) ==
        "NotBijective");
  CHECK(code({0, 1, 2}, {piece(0, 1, 0, 2, 1), piece(1, 2, 2, 5, 1), piece(2, 0, 5, 0, 1)}) == "ok");
}

TEST_CASE("evaluation against the piece formula") {
  Mat2 m{Rational(1, 2), 0, Rational(-1, 2), 1}, n{2, -1, 0, 1}, k{3, 0, 0, 1};
  ProjCircleMap f = make_proj({0, 1, inf}, {m, n, k});
  CHECK(f(ProjPoint(Rational(1, 2))) == ProjPoint(Rational(1, 3)));
  CHECK(f(ProjPoint(3)) == ProjPoint(5));
  CHECK(f(ProjPoint(-1)) == ProjPoint(-3));
  CHECK(f(inf) == inf);
  CHECK(f(ProjPoint(1)) == ProjPoint(1));
}

TEST_CASE("group laws on random maps") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    ProjCircleMap f = rand_proj(rng);
    ProjCircleMap g = rand_proj(rng);
    CHECK(compose_proj(f, invert_proj(f)).is_identity());
    CHECK(invert_proj(invert_proj(f)) == f);
    ProjCircleMap fg = compose_proj(f, g);
    CHECK(proj_from_json(to_json(fg)) == fg);
    for (int j = 0; j < 20; ++j) {
      ProjPoint z = rand_point(rng);
      CHECK(fg(z) == f(g(z)));
    }
  }
  Mat2 a{2, 1, 1, 1}, b{1, 3, 0, 1};
  CHECK(compose_proj(ProjCircleMap::global(a), ProjCircleMap::global(b)) == ProjCircleMap::global(a * b));
}

TEST_CASE("fixed points") {
  auto id = fixed_points_proj(ProjCircleMap());
  CHECK(id.identity_pieces.size() == 1);
  auto par = fixed_points_proj(ProjCircleMap::global(Mat2{1, 1, 0, 1}));
  REQUIRE(par.points.size() == 1);
  CHECK(par.points[0].point.inf);
  auto dil = fixed_points_proj(ProjCircleMap::global(Mat2{2, 0, 0, 1}));
  REQUIRE(dil.points.size() == 2);
  Mat2 hyp{2, 1, 1, 1};  // fixed points (1 +- sqrt 5)/2
  auto h = fixed_points_proj(ProjCircleMap::global(hyp));
  REQUIRE(h.points.size() == 2);
  for (const auto& e : h.points) {
    CHECK(e.point.x.d() == 5);
    CHECK(fixed(hyp, e.point));
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    ProjCircleMap f = rand_proj(rng);
    for (const auto& e : fixed_points_proj(f).points) CHECK(fixed(f.pieces()[e.piece], e.point));
  }
}

TEST_CASE("H-pair classification") {
  std::mt19937_64 rng(4);
  for (bool move : {false, true}) {
    auto hp = corpus::h_pair(rng, move);
    CHECK(fixes_arc_pointwise(hp.f, hp.arc));
    CHECK(fixes_arc_pointwise(hp.g, hp.arc));
    Certificate c = classify_H_pair(hp.f, hp.g, hp.arc, 8);
    REQUIRE(c.kind() == CertKind::ZkWitness);
    CHECK(verify_proj_certificate(c.to_json(), hp.f, hp.g, hp.arc).ok);
    CHECK(classify_H_pair(hp.f, hp.g, hp.arc, 0).kind() == CertKind::Inconclusive);
    ProjCircleMap f2 = compose_proj(hp.f, hp.f);
    Certificate ab = classify_H_pair(hp.f, f2, hp.arc, 8);
    CHECK(ab.kind() == CertKind::Abelian);
    CHECK(verify_proj_certificate(ab.to_json(), hp.f, f2, hp.arc).ok);
  }
  auto hp = corpus::h_pair(rng, false);
  CHECK_THROWS_AS(classify_H_pair(ProjCircleMap::global(Mat2{1, 1, 0, 1}), hp.g, hp.arc, 4), PreconditionError);
}
