// Acceptance suite: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "corpus.hpp"
#include "plg/errors.hpp"
#include "plg/fibered2d.hpp"
#include "plg/linearcert.hpp"
#include "plg/pa2d.hpp"
#include "plg/perturb.hpp"
#include "plg/pl1d.hpp"
#include "plg/projcircle.hpp"
#include "plg/structure1d.hpp"

using namespace plg;

namespace {

// Pinned limits.
constexpr double kGroupLawSeconds = 10.0;
constexpr double kDerivativeSeconds = 300.0;
constexpr int kZkDepth = 8;
constexpr int kZkRequired = 45;
constexpr int kFiberedMaxLen = 8;
constexpr int kFiberedRequired = 16;
constexpr int kPerturbMaxSteps = 4;
constexpr int kHDepth = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Rational rand_q(std::mt19937_64& rng, long lo, long hi, long den) {
  return Rational(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)), den);
}

PLMap1D rand_map(std::mt19937_64& rng) {
  std::uint64_t seed = rng();
  return random_pl(seed, static_cast<int>(rng() % 6), 64);
}

ProjCircleMap rand_proj(std::mt19937_64& rng, int max_breaks) {
  std::uint64_t seed = rng();
  return random_proj(seed, static_cast<int>(rng() % static_cast<unsigned>(max_breaks + 1)));
}

bool maybe_fail(bool ok, int& bad) {
  if (!ok) ++bad;
  return ok;
}

// 1
Outcome group_axioms() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  std::vector<PLMap1D> maps;
  for (int i = 0; i < 500; ++i) maps.push_back(rand_map(rng));
  int bad = 0;
  PLMap1D id;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const PLMap1D& f = maps[i];
    const PLMap1D& g = maps[(i + 1) % maps.size()];
    const PLMap1D& h = maps[(i + 7) % maps.size()];
    PLMap1D fi = invert_pl(f);
    maybe_fail(compose_pl(f, id) == f && compose_pl(id, f) == f, bad);
    maybe_fail(compose_pl(f, fi).is_identity() && compose_pl(fi, f).is_identity(), bad);
    maybe_fail(invert_pl(fi) == f, bad);
    maybe_fail(compose_pl(compose_pl(f, g), h) == compose_pl(f, compose_pl(g, h)), bad);
    maybe_fail(invert_pl(compose_pl(f, g)) == compose_pl(invert_pl(g), fi), bad);
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << "500 maps, " << bad << " law violations, " << s << " s (limit " << kGroupLawSeconds << " s)";
  return {bad == 0 && s < kGroupLawSeconds, d.str()};
}

// 2
Outcome support_conjugation() {
  std::mt19937_64 rng(1002);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    PLMap1D f = rand_map(rng), g = rand_map(rng);
    if (i % 4 == 0) {
      Rational a = rand_q(rng, 1, 6, 16), b = rand_q(rng, 10, 15, 16), t = rand_q(rng, 1, 3, 32);
      g = bump_pl(a, b, Rational(1, 2), t);
    }
    PLMap1D c = compose_pl(f, compose_pl(g, invert_pl(f)));
    maybe_fail(support(c) == image(f, support(g)), bad);
  }
  return {bad == 0, "200 pairs, " + std::to_string(bad) + " mismatches"};
}

// 3
Outcome germ_triviality() {
  std::mt19937_64 rng(1003);
  int bad = 0;
  Word comm = Word::parse("abAB");
  for (int i = 0; i < 100; ++i) {
    PLMap1D f = rand_map(rng), g = rand_map(rng);
    Rational r = germ_trivial_radius(f, g, 0);
    if (!maybe_fail(r > 0, bad)) continue;
    PLMap1D c = evaluate_word(comm, f, g, PL1DOps{});
    bool ok = c(r) == r;
    for (const auto& p : c.breakpoints()) {
      if (p.x <= r && p.x != p.y) ok = false;
    }
    maybe_fail(ok, bad);
  }
  return {bad == 0, "100 pairs, " + std::to_string(bad) + " failures"};
}

// 4
Outcome brin_squier() {
  std::mt19937_64 rng(1004);
  int zk = 0, free = 0, unverified = 0, commuting = 0;
  for (int i = 0; i < 50; ++i) {
    auto [f, g] = corpus::bs_pair(rng);
    if (compose_pl(f, g) == compose_pl(g, f)) ++commuting;
    Certificate c = classify_pair(f, g, kZkDepth);
    if (c.kind() == CertKind::Free) ++free;
    if (c.kind() == CertKind::ZkWitness && c.payload().at("k") == 3) ++zk;
    if (!c.inconclusive() && !verify_pl_certificate(c.to_json(), f, g).ok) ++unverified;
  }
  std::ostringstream d;
  d << zk << "/50 ZkWitness(k=3) (need " << kZkRequired << "), " << unverified << " unverified, " << free
    << " FreeCert, " << commuting << " commuting";
  return {zk >= kZkRequired && unverified == 0 && free == 0 && commuting == 0, d.str()};
}

// 5
Outcome derivative_homomorphism() {
  auto t0 = Clock::now();
  Mat2 alpha{1, 2, 0, 1}, beta{1, 0, 2, 1};
  Point2 p{Rational(1, 2), Rational(1, 2)};
  Rational r(1, 4);
  PAMap2D f = prescribed_derivative_homeo(alpha, p, r), g = prescribed_derivative_homeo(beta, p, r);
  auto chk = derivative_check(f, g, alpha, beta, p, 6);
  double s = seconds_since(t0);
  std::uint64_t expected = 0;
  for (std::size_t n = 1; n <= 6; ++n) expected += reduced_word_count(n);
  std::ostringstream d;
  d << chk.words_checked << " reduced words of length <= 6, " << chk.mismatches.size() << " mismatches, "
    << chk.identity_words.size() << " identity matrix words, " << s << " s (limit " << kDerivativeSeconds << " s)";
  return {chk.words_checked == expected && chk.mismatches.empty() && chk.identity_words.empty() &&
              s < kDerivativeSeconds,
          d.str()};
}

// 6
Outcome freeness_consistency() {
  Mat2 sa{1, 2, 0, 1}, sb{1, 0, 2, 1}, ua{1, 1, 0, 1}, ub{1, 0, 1, 1};
  PingPongData arcs{make_arc(1, ProjPoint::infinity(), false, true), make_arc(ProjPoint::infinity(), -1, true, false),
                    make_arc(0, 1, false, false), make_arc(-1, 0, false, false)};
  Certificate free = pingpong_check(sa, sb, arcs);
  bool free_ok = free.kind() == CertKind::Free && verify_linear_certificate(free.to_json(), sa, sb).ok;
  Certificate rel = matrix_relation_search(ua, ub, {12, true, 1});
  bool rel_ok = rel.kind() == CertKind::Relation && rel.payload().at("length").get<int>() <= 12 &&
                verify_linear_certificate(rel.to_json(), ua, ub).ok;
  Mat2 p4 = evaluate_word(Word::parse("aBaaBaaBaaBa"), ua, ub, Mat2Ops{});
  bool planted = p4.is_scalar();
  Certificate sanov = matrix_relation_search(sa, sb, {14, true, 1});
  bool inconclusive = sanov.kind() == CertKind::Inconclusive;
  bool unimodular_not_free = pingpong_check(ua, ub, arcs).kind() != CertKind::Free;
  std::ostringstream d;
  d << "Sanov ping-pong " << to_string(free.kind()) << "; m=1 relation "
    << (rel.kind() == CertKind::Relation ? rel.payload().at("word").get<std::string>() : "none")
    << "; (aBa)^4 scalar " << (planted ? "yes" : "no") << "; Sanov search at 14 " << to_string(sanov.kind())
    << "; m=1 ping-pong " << (unimodular_not_free ? "not free" : "FREE");
  return {free_ok && rel_ok && planted && inconclusive && unimodular_not_free, d.str()};
}

// 7
Outcome fibered_relations() {
  std::mt19937_64 rng(1007);
  int found = 0, inconclusive = 0, bad = 0;
  for (int i = 0; i < 20; ++i) {
    auto pr = corpus::fibered_pair(rng);
    Certificate c = find_relation_fibered(pr.f, pr.g, kFiberedMaxLen);
    if (c.inconclusive()) {
      ++inconclusive;
      continue;
    }
    Word w = Word::parse(c.payload().at("word").get<std::string>());
    bool ok = c.kind() == CertKind::Relation && !w.empty() &&
              evaluate_word(w, pr.f, pr.g, FiberedOps{}).is_identity() &&
              verify_fibered_certificate(c.to_json(), pr.f, pr.g).ok;
    ok ? ++found : ++bad;
  }
  std::ostringstream d;
  d << found << "/20 verified relations (need " << kFiberedRequired << "), " << bad << " invalid, inconclusive rate "
    << inconclusive << "/20";
  return {found >= kFiberedRequired && bad == 0, d.str()};
}

// 8
Outcome perturbation() {
  std::mt19937_64 rng(1008);
  IntervalSpace sp;
  Word w = Word::parse("abAB");
  int ok_runs = 0, certified = 0;
  std::size_t max_steps = 0;
  for (int i = 0; i < 50; ++i) {
    Rational a = rand_q(rng, 0, 6, 16), b = rand_q(rng, 10, 16, 16);
    Rational c = midpoint(a, b), t = (b - c) / rand_q(rng, 2, 4, 1);
    PLMap1D f = bump_pl(a, b, c, t);
    PLMap1D g = f;
    for (long k = 1 + static_cast<long>(rng() % 3); k > 1; --k) g = compose_pl(g, f);
    Rational y = a + (b - a) * rand_q(rng, 1, 15, 16);
    auto run = break_relation_at_point(sp, f, g, w, y, kPerturbMaxSteps);
    bool ok = run.success && run.steps.size() <= 4;
    ok = ok && evaluate_word(w, run.f, run.g, PL1DOps{})(y) != y;
    for (const auto& s : run.steps) {
      Rational lo = s.center - s.radius, hi = s.center + s.radius;
      for (const auto& p : s.bump.breakpoints()) {
        if ((p.x <= lo || p.x >= hi) && p.x != p.y) ok = false;
      }
      ok = ok && s.bump(lo) == lo && s.bump(hi) == hi;
    }
    ok = ok && replay_perturbation(sp, f, g, run_to_json(sp, w, run)).ok;
    max_steps = std::max(max_steps, run.steps.size());
    if (ok) ++ok_runs;
    Certificate cert = classify_pair(run.f, run.g, kZkDepth);
    if (!cert.inconclusive() && cert.kind() != CertKind::Free && verify_pl_certificate(cert.to_json(), run.f, run.g).ok)
      ++certified;
  }
  std::ostringstream d;
  d << ok_runs << "/50 relations broken within " << kPerturbMaxSteps << " steps (max " << max_steps << "), "
    << certified << "/50 perturbed pairs still certified non-free";
  return {ok_runs == 50 && certified == 50, d.str()};
}

bool surd_in_arc(const SurdPoint& z, const ProjArc& arc) {
  if (z.inf) return arc.contains(ProjPoint::infinity());
  auto ge = [&](const ProjPoint& u) { return u.is_inf() ? false : z.x >= QuadSurd(u.x()); };
  auto le = [&](const ProjPoint& v) { return v.is_inf() ? true : z.x <= QuadSurd(v.x()); };
  const ProjPoint &u = arc.from, &v = arc.to;
  if (u.is_inf()) return le(v);
  if (v.is_inf()) return ge(u);
  if (u.x() < v.x()) return ge(u) && le(v);
  return ge(u) || le(v);
}

// 9
Outcome projective() {
  std::mt19937_64 rng(1009);
  int bad = 0, fixed_checked = 0;
  for (int i = 0; i < 100; ++i) {
    ProjCircleMap f = rand_proj(rng, 4);
    ProjCircleMap g = rand_proj(rng, 4);
    ProjCircleMap h = rand_proj(rng, 2);
    ProjCircleMap fg = compose_proj(f, g);
    maybe_fail(compose_proj(f, invert_proj(f)).is_identity() && invert_proj(invert_proj(f)) == f, bad);
    maybe_fail(compose_proj(fg, h) == compose_proj(f, compose_proj(g, h)), bad);
    maybe_fail(ProjCircleMap::make(fg.breakpoints(), fg.pieces()) == fg, bad);
    for (const ProjPoint& z : {ProjPoint(0), ProjPoint(1), ProjPoint(-3), ProjPoint::infinity()}) {
      maybe_fail(fg(z) == f(g(z)), bad);
    }
    for (const auto& e : fixed_points_proj(f).points) {
      ++fixed_checked;
      maybe_fail(same_point(mobius(f.pieces()[e.piece], e.point), e.point) && (f.breakpoints().empty() || surd_in_arc(e.point, f.piece_arc(e.piece))),
                 bad);
    }
  }
  int certs = 0, free = 0, unverified = 0;
  std::mt19937_64 hr(2009);
  for (int i = 0; i < 20; ++i) {
    auto hp = corpus::h_pair(hr, i % 2 == 1);
    Certificate c = classify_H_pair(hp.f, hp.g, hp.arc, kHDepth);
    if (c.kind() == CertKind::Free) ++free;
    if (c.inconclusive()) continue;
    if (verify_proj_certificate(c.to_json(), hp.f, hp.g, hp.arc).ok)
      ++certs;
    else
      ++unverified;
  }
  std::ostringstream d;
  d << "100 maps, " << bad << " arithmetic failures, " << fixed_checked << " fixed points checked in Q(sqrt d); H-pairs "
    << certs << "/20 verified, " << unverified << " unverified, " << free << " FreeCert";
  return {bad == 0 && certs == 20 && free == 0, d.str()};
}

// 10
struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli_process(const std::string& cmd) {
  CliRun r{-1, {}};
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const std::string d = std::string(PLG_TEST_DATA) + "/";
  const std::vector<std::string> suite{
      "pl eval " + d + "pl_f.json 1/3 3/4",
      "pl compose " + d + "pl_f.json " + d + "pl_finv.json",
      "pl invert " + d + "pl_f.json",
      "pl support " + d + "pl_pair.json",
      "pl bump 1/8 7/8 1/2 1/4",
      "pl random --seed 11 --breaks 6",
      "pl classify --depth 8 " + d + "pl_pair.json",
      "pl classify --depth 0 " + d + "pl_pair.json",
      "fibered compose " + d + "fibered_f.json " + d + "fibered_f.json",
      "fibered fiber " + d + "fibered_f.json 1/3",
      "fibered relation --max-len 8 " + d + "fibered_pair.json",
      "pa derivative-pair " + d + "pa_sanov.json",
      "pa freecheck --max-len 3 " + d + "pa_sanov.json",
      "matrix relations --max-len 12 " + d + "sl2gens.json",
      "matrix relations --max-len 12 --jobs 4 " + d + "sl2gens.json",
      "matrix relations --max-len 12 " + d + "sl2gens_linear.json",
      "matrix relations --max-len 10 --jobs 4 " + d + "sanov.json",
      "matrix pingpong " + d + "pingpong.json",
      "matrix pingpong " + d + "pingpong_bad.json",
      "proj compose " + d + "proj_f.json " + d + "proj_g.json",
      "proj fixedpoints " + d + "proj_g.json",
      "proj classify-h --depth 12 " + d + "proj_hpair.json",
      "perturb run " + d + "perturb_pl.json",
      "perturb run " + d + "perturb_fibered.json",
      "pl compose " + d + "missing.json " + d + "pl_f.json",
  };
  int diffs = 0;
  std::string first_diff;
  for (const auto& args : suite) {
    CliRun a = run_cli_process(cli + " " + args), b = run_cli_process(cli + " " + args);
    if (a.code < 0 || a.code != b.code || a.out != b.out) {
      if (diffs++ == 0) first_diff = args;
    }
  }
  CliRun j1 = run_cli_process(cli + " matrix relations --max-len 12 " + d + "sl2gens.json");
  CliRun j4 = run_cli_process(cli + " matrix relations --max-len 12 --jobs 4 " + d + "sl2gens.json");
  bool jobs_ok = j1.out == j4.out && j1.code == j4.code;
  std::ostringstream det;
  det << suite.size() << " invocations run twice, " << diffs << " differing"
      << (diffs ? " (first: " + first_diff + ")" : "") << "; --jobs 1 vs 4 " << (jobs_ok ? "identical" : "DIFFERENT");
  return {diffs == 0 && jobs_ok, det.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact group axioms", group_axioms},
      {"support conjugation", support_conjugation},
      {"germ triviality", germ_triviality},
      {"Brin-Squier certification", brin_squier},
      {"derivative homomorphism", derivative_homomorphism},
      {"freeness/non-freeness consistency", freeness_consistency},
      {"fibered relations", fibered_relations},
      {"perturbation engine", perturbation},
      {"projective arithmetic", projective},
      {"CLI determinism", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
