#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plg/certificate.hpp"
#include "plg/errors.hpp"
#include "plg/fibered2d.hpp"
#include "plg/pl1d.hpp"
#include "plg/point2.hpp"
#include "plg/rational.hpp"
#include "plg/word.hpp"

namespace plg {

/// A space on which a group acts with local bumps. Neighbourhoods are open
/// balls of a rational radius in the space's metric.
template <class S>
concept PerturbSpace = requires(const S& s, const typename S::element_type& e,
                                const typename S::point_type& p, const Rational& r,
                                const nlohmann::json& j) {
  requires GroupOps<typename S::ops_type>;
  requires std::same_as<typename S::element_type, typename S::ops_type::element_type>;
  { s.ops() } -> std::convertible_to<typename S::ops_type>;
  { s.apply(e, p) } -> std::convertible_to<typename S::point_type>;
  { s.distance(p, p) } -> std::convertible_to<Rational>;
  { s.boundary_distance(p) } -> std::convertible_to<Rational>;
  { s.bump(p, r, r) } -> std::convertible_to<typename S::element_type>;
  { s.identity_outside(e, p, r) } -> std::convertible_to<bool>;
  { s.support_json(p, r) } -> std::convertible_to<nlohmann::json>;
  { s.element_to_json(e) } -> std::convertible_to<nlohmann::json>;
  { s.element_from_json(j) } -> std::convertible_to<typename S::element_type>;
  { s.point_to_json(p) } -> std::convertible_to<nlohmann::json>;
  { s.point_from_json(j) } -> std::convertible_to<typename S::point_type>;
};

/// PL(I) acting on [0,1]; U = (y - r, y + r).
struct IntervalSpace {
  using ops_type = PL1DOps;
  using element_type = PLMap1D;
  using point_type = Rational;
  PL1DOps ops() const { return {}; }
  Rational apply(const PLMap1D& f, const Rational& x) const { return f(x); }
  Rational distance(const Rational& a, const Rational& b) const { return (a - b).abs(); }
  Rational boundary_distance(const Rational& x) const;
  PLMap1D bump(const Rational& y, const Rational& r, const Rational& t) const;
  bool identity_outside(const PLMap1D& h, const Rational& y, const Rational& r) const;
  nlohmann::json support_json(const Rational& y, const Rational& r) const;
  nlohmann::json element_to_json(const PLMap1D& f) const;
  PLMap1D element_from_json(const nlohmann::json& j) const;
  nlohmann::json point_to_json(const Rational& x) const;
  Rational point_from_json(const nlohmann::json& j) const;
};

/// Leaf-preserving maps of the square; U is the open box of half-width r in
/// the max metric.
struct FiberedSpace {
  using ops_type = FiberedOps;
  using element_type = FiberedMap2D;
  using point_type = Point2;
  FiberedOps ops() const { return {}; }
  Point2 apply(const FiberedMap2D& f, const Point2& p) const { return f(p); }
  Rational distance(const Point2& a, const Point2& b) const;
  Rational boundary_distance(const Point2& p) const;
  FiberedMap2D bump(const Point2& y, const Rational& r, const Rational& t) const;
  bool identity_outside(const FiberedMap2D& h, const Point2& y, const Rational& r) const;
  nlohmann::json support_json(const Point2& y, const Rational& r) const;
  nlohmann::json element_to_json(const FiberedMap2D& f) const;
  FiberedMap2D element_from_json(const nlohmann::json& j) const;
  nlohmann::json point_to_json(const Point2& p) const;
  Point2 point_from_json(const nlohmann::json& j) const;
};

template <class P>
struct OrbitTrace {
  P base;
  std::vector<P> points;  // y_0 ... y_k
  std::optional<std::size_t> first_repeat;
};

template <class E, class P>
struct PerturbationStep {
  std::size_t m = 0;
  Letter letter = Letter::A;
  P center;
  Rational radius, t;
  int halvings = 0;
  E bump;
  E f, g;
};

template <class E, class P>
struct PerturbationRun {
  bool success = false;
  std::string reason;
  E f, g;
  std::vector<PerturbationStep<E, P>> steps;
  OrbitTrace<P> trace;
};

template <PerturbSpace S>
OrbitTrace<typename S::point_type> orbit_trace(const S& space, const typename S::element_type& f,
                                               const typename S::element_type& g, const Word& w,
                                               const typename S::point_type& y) {
  if (w.empty()) throw PreconditionError("orbit_trace: empty word");
  using E = typename S::element_type;
  auto ops = space.ops();
  E finv = ops.invert(f), ginv = ops.invert(g);
  OrbitTrace<typename S::point_type> tr{y, {y}, std::nullopt};
  for (std::size_t i = 1; i <= w.size(); ++i) {
    Letter l = w.t(i);
    const E& m = l == Letter::A ? f : l == Letter::AInv ? finv : l == Letter::B ? g : ginv;
    tr.points.push_back(space.apply(m, tr.points.back()));
    if (!tr.first_repeat) {
      for (std::size_t j = 0; j < i; ++j) {
        if (tr.points[j] == tr.points[i]) {
          tr.first_repeat = i;
          break;
        }
      }
    }
  }
  return tr;
}

namespace detail {

template <PerturbSpace S>
typename S::element_type letter_value(const S& space, const typename S::element_type& f,
                                      const typename S::element_type& g, Letter l) {
  const auto& base = generator(l) == 0 ? f : g;
  return sign(l) > 0 ? base : space.ops().invert(base);
}

/// Avoidance sets: U misses y_0..y_{m-2}; t_m(U) misses {y_0..y_{m-1}} \ {y_m}.
template <class P>
void avoidance_sets(const std::vector<P>& pts, std::size_t m, std::vector<P>& in_u,
                    std::vector<P>& in_image) {
  for (std::size_t i = 0; i + 1 < m; ++i) in_u.push_back(pts[i]);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(pts[i] == pts[m])) in_image.push_back(pts[i]);
  }
}

}  // namespace detail

/// One step of the relation-breaking procedure: perturbs the generator named
/// by t_m near y_{m-1}. Throws DegenerateGeometry when no neighbourhood is
/// admissible and InternalInconsistency when a post-condition fails.
template <PerturbSpace S>
PerturbationStep<typename S::element_type, typename S::point_type> perturb_once(
    const S& space, const typename S::element_type& f, const typename S::element_type& g,
    const Word& w, const typename S::point_type& y) {
  using E = typename S::element_type;
  using P = typename S::point_type;
  auto ops = space.ops();
  auto tr = orbit_trace(space, f, g, w, y);
  if (!tr.first_repeat) throw PreconditionError("perturb_once: orbit has no repeat");
  std::size_t m = *tr.first_repeat;
  const P& c = tr.points[m - 1];
  Letter lm = w.t(m);
  E tm = detail::letter_value(space, f, g, lm);
  E tm_inv = ops.invert(tm);

  std::vector<P> in_u, in_image;
  detail::avoidance_sets(tr.points, m, in_u, in_image);
  Rational r = space.boundary_distance(c);
  for (const P& p : in_u) r = min(r, space.distance(c, p));
  if (r.is_zero()) throw DegenerateGeometry("no admissible neighbourhood at letter " + std::to_string(m));
  std::vector<P> pre;
  for (const P& p : in_image) pre.push_back(space.apply(tm_inv, p));
  int halvings = 0;
  auto image_ok = [&] {
    for (const P& p : pre) {
      if (space.distance(c, p) < r) return false;
    }
    return true;
  };
  while (!image_ok()) {
    r /= Rational(2);
    if (++halvings > 4096) throw DegenerateGeometry("image constraint never satisfied");
  }
  Rational t = r / Rational(2);
  E h = space.bump(c, r, t);
  if (!space.identity_outside(h, c, r)) throw InternalInconsistency("bump leaves its neighbourhood");
  if (space.apply(h, c) == c) throw InternalInconsistency("bump fixes its centre");

  PerturbationStep<E, P> st{m, lm, c, r, t, halvings, h, f, g};
  E& target = generator(lm) == 0 ? st.f : st.g;
  target = sign(lm) > 0 ? ops.compose(target, h) : ops.compose(ops.invert(h), target);

  auto nt = orbit_trace(space, st.f, st.g, w, y);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(nt.points[i] == tr.points[i])) throw InternalInconsistency("orbit prefix changed");
  }
  if (nt.first_repeat && *nt.first_repeat <= m) throw InternalInconsistency("no progress");
  return st;
}

/// Perturbs until w(f', g')(y) != y or the step budget runs out.
template <PerturbSpace S>
PerturbationRun<typename S::element_type, typename S::point_type> break_relation_at_point(
    const S& space, const typename S::element_type& f, const typename S::element_type& g,
    const Word& w, const typename S::point_type& y, int max_steps) {
  auto tr = orbit_trace(space, f, g, w, y);
  if (!(tr.points.back() == y)) throw PreconditionError("w does not fix the base point");
  PerturbationRun<typename S::element_type, typename S::point_type> run{false, "", f, g, {}, tr};
  while (run.trace.points.back() == y) {
    if (static_cast<int>(run.steps.size()) >= max_steps) {
      run.reason = "step budget exhausted";
      return run;
    }
    auto st = perturb_once(space, run.f, run.g, w, y);
    run.f = st.f;
    run.g = st.g;
    run.steps.push_back(std::move(st));
    run.trace = orbit_trace(space, run.f, run.g, w, y);
  }
  run.success = true;
  return run;
}

template <PerturbSpace S>
nlohmann::json trace_to_json(const S& space, const OrbitTrace<typename S::point_type>& tr) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : tr.points) pts.push_back(space.point_to_json(p));
  nlohmann::json j{{"base", space.point_to_json(tr.base)}, {"points", pts}};
  j["first_repeat"] = tr.first_repeat ? nlohmann::json(*tr.first_repeat) : nlohmann::json();
  return j;
}

/// {"word", "base", "success", "reason", "f", "g", "steps": [...], "trace"}
template <PerturbSpace S>
nlohmann::json run_to_json(const S& space, const Word& w,
                           const PerturbationRun<typename S::element_type, typename S::point_type>& run) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : run.steps) {
    steps.push_back({{"m", s.m},
                     {"letter", std::string(1, to_char(s.letter))},
                     {"center", space.point_to_json(s.center)},
                     {"radius", s.radius.str()},
                     {"t", s.t.str()},
                     {"halvings", s.halvings},
                     {"support", space.support_json(s.center, s.radius)},
                     {"bump", space.element_to_json(s.bump)},
                     {"f", space.element_to_json(s.f)},
                     {"g", space.element_to_json(s.g)}});
  }
  return {{"word", w.str()},
          {"base", space.point_to_json(run.trace.base)},
          {"success", run.success},
          {"reason", run.reason},
          {"f", space.element_to_json(run.f)},
          {"g", space.element_to_json(run.g)},
          {"steps", steps},
          {"trace", trace_to_json(space, run.trace)}};
}

/// Re-checks every logged step against the original pair: the first repeat
/// index, the admissibility of the logged neighbourhood, the locality of the
/// logged bump, the generator update and the orbit progress.
template <PerturbSpace S>
VerifyReport replay_perturbation(const S& space, const typename S::element_type& f0,
                                 const typename S::element_type& g0, const nlohmann::json& log) {
  using E = typename S::element_type;
  using P = typename S::point_type;
  VerifyReport rep;
  auto fail = [&](const std::string& msg) {
    rep.log.push_back("FAIL " + msg);
    rep.ok = false;
    return rep;
  };
  try {
    auto ops = space.ops();
    Word w = Word::parse(log.at("word").get<std::string>());
    if (w.empty()) return fail("empty word");
    P y = space.point_from_json(log.at("base"));
    E f = f0, g = g0;
    auto tr = orbit_trace(space, f, g, w, y);
    if (!(tr.points.back() == y)) return fail("initial pair does not fix the base point");
    std::size_t idx = 0;
    for (const auto& sj : log.at("steps")) {
      std::string tag = "step " + std::to_string(idx++) + ": ";
      if (!tr.first_repeat) return fail(tag + "orbit already distinct");
      std::size_t m = *tr.first_repeat;
      if (sj.at("m").get<std::size_t>() != m) return fail(tag + "first repeat mismatch");
      Letter lm = w.t(m);
      if (sj.at("letter").get<std::string>() != std::string(1, to_char(lm))) return fail(tag + "letter mismatch");
      P c = space.point_from_json(sj.at("center"));
      if (!(c == tr.points[m - 1])) return fail(tag + "centre is not y_{m-1}");
      Rational r = Rational::parse(sj.at("radius").get<std::string>());
      if (r <= 0) return fail(tag + "radius not positive");
      std::vector<P> in_u, in_image;
      detail::avoidance_sets(tr.points, m, in_u, in_image);
      if (space.boundary_distance(c) < r) return fail(tag + "neighbourhood leaves the space");
      for (const P& p : in_u) {
        if (space.distance(c, p) < r) return fail(tag + "neighbourhood meets an earlier orbit point");
      }
      E tm_inv = ops.invert(detail::letter_value(space, f, g, lm));
      for (const P& p : in_image) {
        if (space.distance(c, space.apply(tm_inv, p)) < r) return fail(tag + "image meets an earlier orbit point");
      }
      E h = space.element_from_json(sj.at("bump"));
      if (!space.identity_outside(h, c, r)) return fail(tag + "bump not supported in its neighbourhood");
      if (space.apply(h, c) == c) return fail(tag + "bump fixes its centre");
      E& target = generator(lm) == 0 ? f : g;
      target = sign(lm) > 0 ? ops.compose(target, h) : ops.compose(ops.invert(h), target);
      if (!ops.equals(f, space.element_from_json(sj.at("f"))) || !ops.equals(g, space.element_from_json(sj.at("g"))))
        return fail(tag + "updated pair mismatch");
      auto nt = orbit_trace(space, f, g, w, y);
      for (std::size_t i = 0; i < m; ++i) {
        if (!(nt.points[i] == tr.points[i])) return fail(tag + "orbit prefix changed");
      }
      if (nt.first_repeat && *nt.first_repeat <= m) return fail(tag + "no progress");
      rep.log.push_back("ok " + tag + "letter " + std::to_string(m) + " radius " + r.str());
      tr = std::move(nt);
    }
    if (!ops.equals(f, space.element_from_json(log.at("f"))) || !ops.equals(g, space.element_from_json(log.at("g"))))
      return fail("final pair mismatch");
    bool broken = !(tr.points.back() == y);
    if (broken != log.at("success").get<bool>()) return fail("success flag mismatch");
    if (broken) {
      E wv = evaluate_word(w, f, g, ops);
      if (space.apply(wv, y) == y) return fail("word evaluation still fixes the base point");
      rep.log.push_back("ok w(f',g')(y) != y");
    }
    rep.ok = true;
  } catch (const std::exception& e) {
    return fail(std::string("malformed log: ") + e.what());
  }
  return rep;
}

}  // namespace plg
