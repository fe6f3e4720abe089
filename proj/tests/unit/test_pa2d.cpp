#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "plg/errors.hpp"
#include "plg/json_io.hpp"
#include "plg/pa2d.hpp"

using namespace plg;
using plg::testgen::rand_unit;

namespace {
const Rational h(1, 2), q(1, 4);
const Point2 center{h, h};

Point2 rand_point(std::mt19937_64& rng) { return {rand_unit(rng), rand_unit(rng)}; }

Polygon square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }
}  // namespace

TEST_CASE("construction and validation codes") {
  CHECK(make_pa({{square(), Affine{}}}).is_identity());
  auto code = [](std::vector<Cell> cells) {
    try {
      make_pa(std::move(cells));
    } catch (const ValidationError& e) {
      return e.code();
    }
    return std::string("ok");
  };
  Polygon lower{{0, 0}, {1, 0}, {1, 1}}, upper{{0, 0}, {1, 1}, {0, 1}};
  Point2 u0[3] = {{0, 0}, {1, 1}, {0, 1}}, u1[3] = {{0, 0}, {h, 1}, {0, 1}};
  CHECK(code({{lower, Affine{}}, {upper, affine_from_triangles(u0, u1)}}) == "ContinuityViolation");
  CHECK(code({{square(), Affine{Mat2{0, 1, 1, 0}, {0, 0}}}}) == "OrientationViolation");
  CHECK(code({{square(), Affine{Mat2{h, 0, 0, 1}, {0, 0}}}}) == "BoundaryViolation");
  CHECK(code({{lower, Affine{}}}) == "SubdivisionViolation");
  CHECK(code({{lower, Affine{}}, {upper, Affine{}}}) == "ok");
}

TEST_CASE("prescribed derivative") {
  CHECK(prescribed_derivative_homeo(Mat2::identity(), center, q).is_identity());
  Mat2 alpha{1, 2, 0, 1};
  PAMap2D f = prescribed_derivative_homeo(alpha, center, q);
  validate_pa(f);
  CHECK(linear_part_at(f, center) == alpha);
  CHECK(f(center) == center);
  CHECK(f({Rational(1, 8), Rational(1, 8)}) == Point2{Rational(1, 8), Rational(1, 8)});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Point2 p = rand_point(rng);
    if ((p.x - h).abs() >= q || (p.y - h).abs() >= q) CHECK(f(p) == p);
  }
  Mat2 diag{2, 0, 0, h};
  PAMap2D d = prescribed_derivative_homeo(diag, center, q);
  validate_pa(d);
  CHECK(linear_part_at(d, center) == diag);
  CHECK(total_area(d) == 1);
  CHECK_THROWS_AS(linear_part_at(f, {center.x - q, center.y}), NotLocallyAffine);
  CHECK_THROWS_AS(prescribed_derivative_homeo(Mat2{0, 1, 1, 0}, center, q), PreconditionError);
  CHECK_THROWS_AS(prescribed_derivative_homeo(alpha, center, h), PreconditionError);
}

TEST_CASE("composition, inversion and round trips") {
  PAMap2D f = prescribed_derivative_homeo(Mat2{1, 2, 0, 1}, center, q);
  PAMap2D g = prescribed_derivative_homeo(Mat2{1, 0, 2, 1}, {Rational(3, 5), Rational(2, 5)}, Rational(1, 3));
  CHECK(compose_pa(f, invert_pa(f)).is_identity());
  CHECK(equivalent(invert_pa(invert_pa(f)), f));
  PAMap2D fg = compose_pa(f, g);
  validate_pa(fg);
  CHECK(total_area(fg) == 1);
  CHECK(equivalent(compose_pa(compose_pa(f, g), f), compose_pa(f, compose_pa(g, f))));
  CHECK(pa_from_json(to_json(fg)) == fg);
  PAMap2D fi = invert_pa(f);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Point2 p = rand_point(rng);
    CHECK(fi(f(p)) == p);
    CHECK(fg(p) == f(g(p)));
  }
}

TEST_CASE("shear product on a sub-square") {
  Mat2 s1{1, 1, 0, 1}, s2{1, 0, 1, 1};
  PAMap2D f = prescribed_derivative_homeo(s1, center, q);
  PAMap2D g = prescribed_derivative_homeo(s2, center, q);
  CHECK(linear_part_at(compose_pa(f, g), center) == Mat2{2, 1, 1, 1});
}
