#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "plg/errors.hpp"
#include "plg/perturb.hpp"
#include "plg/structure1d.hpp"

using namespace plg;

namespace {

const Word comm = Word::parse("abAB");

template <class S, class Run>
void check_run(const S& space, const Run& run, const Word& w) {
  using P = typename S::point_type;
  REQUIRE(run.success);
  CHECK(run.steps.size() <= w.size());
  P y = run.trace.base;
  auto wv = evaluate_word(w, run.f, run.g, space.ops());
  CHECK(!(space.apply(wv, y) == y));
  std::size_t prev = 0;
  for (const auto& s : run.steps) {
    CHECK(space.identity_outside(s.bump, s.center, s.radius));
    CHECK(s.m > prev);
    prev = s.m;
  }
}

}  // namespace

TEST_CASE("orbit traces") {
  IntervalSpace sp;
  PLMap1D f = bump_pl(0, Rational(1, 2), Rational(1, 4), Rational(1, 8));
  auto one = orbit_trace(sp, f, PLMap1D(), Word::parse("a"), Rational(1, 4));
  CHECK(one.points.size() == 2);
  CHECK(!one.first_repeat);
  auto c = orbit_trace(sp, f, f, comm, Rational(1, 4));
  CHECK(c.points[4] == c.points[0]);
  REQUIRE(c.first_repeat);
  CHECK(*c.first_repeat <= 4);
  CHECK_THROWS_AS(orbit_trace(sp, f, f, Word(), Rational(1, 4)), PreconditionError);
  auto out = orbit_trace(sp, f, f, comm, Rational(3, 4));
  CHECK(*out.first_repeat == 1);
}

TEST_CASE("single letter with identity generator") {
  IntervalSpace sp;
  Word w = Word::parse("a");
  auto run = break_relation_at_point(sp, PLMap1D(), PLMap1D(), w, Rational(1, 3), 4);
  check_run(sp, run, w);
  CHECK(run.steps.size() == 1);
  CHECK(run.steps[0].m == 1);
  CHECK(run.f(Rational(1, 3)) != Rational(1, 3));
  CHECK(run.g.is_identity());
  CHECK_THROWS_AS(break_relation_at_point(sp, PLMap1D(), PLMap1D(), w, Rational(0), 4), DegenerateGeometry);
}

TEST_CASE("commutator of equal bumps") {
  IntervalSpace sp;
  PLMap1D f = bump_pl(Rational(1, 8), Rational(7, 8), Rational(1, 2), Rational(1, 4));
  auto run = break_relation_at_point(sp, f, f, comm, Rational(1, 2), 8);
  check_run(sp, run, comm);
  auto log = run_to_json(sp, comm, run);
  auto rep = replay_perturbation(sp, f, f, log);
  CHECK(rep.ok);
  auto bad = log;
  bad["steps"][0]["radius"] = "1";
  CHECK(!replay_perturbation(sp, f, f, bad).ok);
  auto wrong = log;
  wrong["success"] = false;
  CHECK(!replay_perturbation(sp, f, f, wrong).ok);
  CHECK(!replay_perturbation(sp, f, PLMap1D(), log).ok);
}

TEST_CASE("base point outside the supports") {
  IntervalSpace sp;
  PLMap1D f = bump_pl(0, Rational(1, 2), Rational(1, 4), Rational(1, 8));
  auto run = break_relation_at_point(sp, f, f, comm, Rational(3, 4), 8);
  check_run(sp, run, comm);
  CHECK(run.steps[0].m == 1);
}

TEST_CASE("commuting powers break in at most four steps") {
  IntervalSpace sp;
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    Rational a = testgen::rand_unit(rng, 30) / 2;
    Rational b = Rational(1) - testgen::rand_unit(rng, 30) / 2;
    if (!(a < b)) continue;
    Rational y = midpoint(a, b);
    PLMap1D f = bump_pl(a, b, y, (b - y) / 3);
    PLMap1D g = compose_pl(f, f);
    auto run = break_relation_at_point(sp, f, g, comm, y, 4);
    check_run(sp, run, comm);
    CHECK(replay_perturbation(sp, f, g, run_to_json(sp, comm, run)).ok);
    auto cert = classify_pair(run.f, run.g, 8);
    CHECK(cert.kind() != CertKind::Free);
  }
}

TEST_CASE("fibered perturbation") {
  FiberedSpace sp;
  Point2 y{Rational(1, 2), Rational(1, 2)};
  FiberedMap2D f = vertical_bump(Rational(1, 4), Rational(3, 4), y, Rational(1, 8));
  auto run = break_relation_at_point(sp, f, f, comm, y, 8);
  check_run(sp, run, comm);
  CHECK(replay_perturbation(sp, f, f, run_to_json(sp, comm, run)).ok);
  auto id = break_relation_at_point(sp, FiberedMap2D(), FiberedMap2D(), Word::parse("aB"), y, 4);
  check_run(sp, id, Word::parse("aB"));
}

TEST_CASE("identity pair needs several steps") {
  IntervalSpace sp;
  auto run = break_relation_at_point(sp, PLMap1D(), PLMap1D(), comm, Rational(1, 2), 8);
  check_run(sp, run, comm);
  CHECK(run.steps.size() >= 2);
  CHECK(replay_perturbation(sp, PLMap1D(), PLMap1D(), run_to_json(sp, comm, run)).ok);
  auto capped = break_relation_at_point(sp, PLMap1D(), PLMap1D(), comm, Rational(1, 2), 1);
  CHECK(!capped.success);
  CHECK(capped.steps.size() == 1);
}
