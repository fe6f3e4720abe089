#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "plg/errors.hpp"
#include "plg/structure1d.hpp"

using namespace plg;

namespace {
const Rational h(1, 2), q(1, 4);
PLMap1D stretch() { return make_pl({{0, 0}, {h, q}, {1, 1}}); }
}  // namespace

TEST_CASE("pair analysis") {
  auto id = analyze_pair(PLMap1D(), PLMap1D());
  CHECK(id.common_fixed == IntervalSet({{0, 1}}));
  CHECK(id.components.empty());
  auto two = analyze_pair(bump_pl(0, h, q, Rational(1, 8)), bump_pl(q, Rational(3, 4), h, Rational(1, 8)));
  REQUIRE(two.components.size() == 1);
  CHECK(two.components[0] == OpenInterval{0, Rational(3, 4)});
  auto full = analyze_pair(stretch(), PLMap1D());
  REQUIRE(full.components.size() == 1);
  CHECK(full.components[0] == OpenInterval{0, 1});
}

TEST_CASE("germ trivial radius") {
  CHECK(germ_trivial_radius(stretch(), stretch(), 0) == 1);
  CHECK_THROWS_AS(germ_trivial_radius(stretch(), PLMap1D(), Rational(1, 3)), PreconditionError);
  PLMap1D f = bump_pl(0, q, Rational(1, 8), Rational(1, 16));
  PLMap1D g = bump_pl(Rational(3, 4), 1, Rational(7, 8), Rational(1, 16));
  CHECK(germ_trivial_radius(f, g, h) >= q);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    PLMap1D a = testgen::rand_pl(rng), b = testgen::rand_pl(rng);
    Rational r = germ_trivial_radius(a, b, 0);
    CHECK(r > 0);
    PLMap1D c = evaluate_word(Word::parse("abAB"), a, b, PL1DOps{});
    for (const auto& p : c.breakpoints()) {
      if (p.x <= r) CHECK(p.x == p.y);
    }
  }
}

TEST_CASE("displacement words") {
  auto w = find_displacement(stretch(), PLMap1D(), q, h, 4);
  REQUIRE(w);
  CHECK(w->str() == "AA");
  auto one = find_displacement(stretch(), PLMap1D(), q, Rational(3, 8), 4);
  REQUIRE(one);
  CHECK(one->str() == "A");
  CHECK(!find_displacement(stretch(), PLMap1D(), q, h, 0));
}

TEST_CASE("Z^k witnesses and classification") {
  PLMap1D f = stretch(), g = bump_pl(q, h, Rational(3, 8), Rational(1, 16));
  Certificate c3 = zk_witnesses(f, g, 3, 8);
  REQUIRE(c3.kind() == CertKind::ZkWitness);
  auto rep = verify_pl_certificate(c3.to_json(), f, g);
  CHECK(rep.ok);
  CHECK(zk_witnesses(f, g, 2, 8).kind() == CertKind::ZkWitness);
  Certificate ab = zk_witnesses(f, f, 3, 8);
  CHECK(ab.kind() == CertKind::Inconclusive);
  CHECK(ab.payload().at("hint") == "AbelianCert");
  CHECK(classify_pair(f, f, 8).kind() == CertKind::Abelian);
  CHECK(verify_pl_certificate(classify_pair(f, f, 8).to_json(), f, f).ok);
  CHECK(classify_pair(f, g, 8).kind() == CertKind::ZkWitness);
  CHECK(classify_pair(f, g, 0).kind() == CertKind::Inconclusive);
  CHECK(classify_pair(f, g, 1).kind() == CertKind::Inconclusive);
  CHECK_THROWS_AS(zk_witnesses(f, g, 1, 8), PreconditionError);
}

TEST_CASE("tampered certificates fail replay") {
  PLMap1D f = stretch(), g = bump_pl(q, h, Rational(3, 8), Rational(1, 16));
  auto j = classify_pair(f, g, 8).to_json();
  j["payload"]["witnesses"][0]["word"] = "ab";
  CHECK(!verify_pl_certificate(j, f, g).ok);
  auto a = classify_pair(f, f, 8).to_json();
  CHECK(!verify_pl_certificate(a, f, g).ok);
}
