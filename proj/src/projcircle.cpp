#include "plg/projcircle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "issuer.hpp"
#include "plg/errors.hpp"
#include "plg/json_io.hpp"
#include "zk_search.hpp"

namespace plg {

ProjCircleMap::ProjCircleMap() : pieces_{Mat2::identity()} {}

ProjCircleMap ProjCircleMap::make(std::vector<ProjPoint> bps, std::vector<Mat2> pieces) {
  const std::size_t n = bps.size();
  if (pieces.size() != std::max<std::size_t>(1, n)) {
    throw ParseError("a projective map needs one piece per breakpoint");
  }
  for (const auto& m : pieces) {
    if (m.det().sign() <= 0) throw ValidationError("OrientationViolation", "piece " + m.str() + " has det <= 0");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return bps[i] < bps[j]; });
  std::vector<ProjPoint> sb;
  std::vector<Mat2> sp;
  for (std::size_t i : order) {
    if (!sb.empty() && sb.back() == bps[i]) throw ParseError("repeated breakpoint " + bps[i].str());
    sb.push_back(bps[i]);
    sp.push_back(pieces[i].projective_normal());
  }
  if (n <= 1) return ProjCircleMap({}, {pieces[0].projective_normal()});
  std::vector<ProjPoint> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nx = (i + 1) % n;
    if (mobius(sp[i], sb[nx]) != mobius(sp[nx], sb[nx])) {
      throw ValidationError("ContinuityViolation", "pieces disagree at " + sb[nx].str());
    }
    img[i] = mobius(sp[i], sb[i]);
  }
  int descents = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const ProjPoint& u = img[i];
    const ProjPoint& v = img[(i + 1) % n];
    if (u == v) throw ValidationError("NotBijective", "two breakpoints share an image");
    if (v < u) ++descents;
  }
  if (descents != 1) throw ValidationError("NotBijective", "image arcs wind " + std::to_string(descents) + " times");
  // merge neighbours with equal matrices
  bool changed = true;
  while (changed && sb.size() > 1) {
    changed = false;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      std::size_t prev = (j + sb.size() - 1) % sb.size();
      if (sp[prev] == sp[j]) {
        sb.erase(sb.begin() + static_cast<long>(j));
        sp.erase(sp.begin() + static_cast<long>(j));
        changed = true;
        break;
      }
    }
  }
  if (sb.size() <= 1) return ProjCircleMap({}, {sp[0]});
  return ProjCircleMap(std::move(sb), std::move(sp));
}

std::size_t ProjCircleMap::piece_index(const ProjPoint& z) const {
  if (bps_.empty()) return 0;
  auto it = std::upper_bound(bps_.begin(), bps_.end(), z);
  if (it == bps_.begin()) return bps_.size() - 1;
  return static_cast<std::size_t>(it - bps_.begin()) - 1;
}

ProjArc ProjCircleMap::piece_arc(std::size_t i) const {
  if (bps_.size() < 2) throw PreconditionError("piece_arc: a global map has no piece arcs");
  return make_arc(bps_[i], bps_[(i + 1) % bps_.size()], true, true);
}

ProjPoint ProjCircleMap::operator()(const ProjPoint& z) const { return mobius(pieces_[piece_index(z)], z); }

ProjCircleMap compose_proj(const ProjCircleMap& f, const ProjCircleMap& g) {
  if (f.breakpoints().empty() && g.breakpoints().empty()) {
    return ProjCircleMap::global(f.pieces()[0] * g.pieces()[0]);
  }
  ProjCircleMap gi = invert_proj(g);
  std::vector<ProjPoint> pts = g.breakpoints();
  for (const auto& b : f.breakpoints()) pts.push_back(gi(b));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto piece_at = [&](const ProjPoint& s) {
    return f.pieces()[f.piece_index(g(s))] * g.pieces()[g.piece_index(s)];
  };
  if (pts.size() == 1) {
    ProjPoint s = pts[0].is_inf() ? ProjPoint(0) : ProjPoint(pts[0].x() + 1);
    return ProjCircleMap::global(piece_at(s));
  }
  std::vector<Mat2> pieces;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ProjArc arc = make_arc(pts[i], pts[(i + 1) % pts.size()], true, true);
    pieces.push_back(piece_at(arc.interior_point()));
  }
  return ProjCircleMap::make(std::move(pts), std::move(pieces));
}

ProjCircleMap invert_proj(const ProjCircleMap& f) {
  if (f.breakpoints().empty()) return ProjCircleMap::global(f.pieces()[0].adjugate());
  std::vector<ProjPoint> bps;
  std::vector<Mat2> pieces;
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    bps.push_back(mobius(f.pieces()[i], f.breakpoints()[i]));
    pieces.push_back(f.pieces()[i].adjugate());
  }
  return ProjCircleMap::make(std::move(bps), std::move(pieces));
}

namespace {

// Sends 0 to u and infinity to v.
Mat2 chart(const ProjPoint& u, const ProjPoint& v) {
  if (v.is_inf()) return {1, u.x(), 0, 1};
  if (u.is_inf()) return {v.x(), 1, 1, 0};
  return {v.x(), u.x(), 1, 1};
}

std::vector<ProjPoint> random_points(std::mt19937_64& rng, int n) {
  std::vector<ProjPoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    ProjPoint z = rng() % 8 == 0 ? ProjPoint::infinity()
                                 : ProjPoint(Rational(static_cast<long>(rng() % 25) - 12,
                                                      1 + static_cast<long>(rng() % 4)));
    if (std::find(pts.begin(), pts.end(), z) == pts.end()) pts.push_back(z);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

ProjCircleMap random_proj(std::uint64_t seed, int n_breaks) {
  std::mt19937_64 rng(seed);
  if (n_breaks < 2) {
    for (;;) {
      auto e = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
      Mat2 m{e(), e(), e(), e()};
      if (m.det().sign() > 0) return ProjCircleMap::global(m);
    }
  }
  auto b = random_points(rng, n_breaks);
  auto c = random_points(rng, n_breaks);
  std::rotate(c.begin(), c.begin() + static_cast<long>(rng() % static_cast<unsigned>(n_breaks)), c.end());
  static const Rational scales[4] = {1, 2, Rational(1, 2), 3};
  std::vector<Mat2> pieces;
  for (int i = 0; i < n_breaks; ++i) {
    int nx = (i + 1) % n_breaks;
    Mat2 tb = chart(b[i], b[nx]), tc = chart(c[i], c[nx]);
    Rational lam = scales[rng() % 4];
    if ((tb.det() * tc.det()).sign() < 0) lam = -lam;
    pieces.push_back(tc * Mat2{lam, 0, 0, 1} * tb.inverse());
  }
  return ProjCircleMap::make(std::move(b), std::move(pieces));
}

SurdPoint mobius(const Mat2& m, const SurdPoint& z) {
  if (z.inf) {
    if (m.c.is_zero()) return {true, {}};
    return {false, QuadSurd(m.a / m.c)};
  }
  QuadSurd den = QuadSurd(m.c) * z.x + QuadSurd(m.d);
  if (den.sign() == 0) return {true, {}};
  return {false, (QuadSurd(m.a) * z.x + QuadSurd(m.b)) / den};
}

bool same_point(const SurdPoint& a, const SurdPoint& b) {
  return a.inf == b.inf && (a.inf || compare(a.x, b.x) == 0);
}

namespace {

// -1, 0, 1 with infinity above every number.
int cmp(const SurdPoint& a, const ProjPoint& b) {
  if (a.inf || b.is_inf()) return static_cast<int>(a.inf) - static_cast<int>(b.is_inf());
  return compare(a.x, QuadSurd(b.x()));
}

bool on_closed_arc(const SurdPoint& z, const ProjArc& arc) {
  if (cmp(z, arc.from) == 0 || cmp(z, arc.to) == 0) return true;
  // walking up from `from`: z comes before `to`
  bool z_wrapped = cmp(z, arc.from) < 0;
  bool to_wrapped = arc.to < arc.from;
  if (z_wrapped != to_wrapped) return !z_wrapped;
  return cmp(z, arc.to) < 0;
}

}  // namespace

FixedPointRecord fixed_points_proj(const ProjCircleMap& f) {
  FixedPointRecord rec;
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const Mat2& m = f.pieces()[i];
    if (m.is_scalar()) {
      rec.identity_pieces.push_back(i);
      continue;
    }
    std::vector<SurdPoint> roots;
    if (m.c.is_zero()) {
      roots.push_back({true, {}});
      if (m.d != m.a) roots.push_back({false, QuadSurd(m.b / (m.d - m.a))});
    } else {
      Rational disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
      if (disc.sign() >= 0) {
        QuadSurd r = QuadSurd::sqrt_of(disc);
        QuadSurd base(m.a - m.d);
        QuadSurd two_c(2 * m.c);
        roots.push_back({false, (base - r) / two_c});
        if (disc.sign() > 0) roots.push_back({false, (base + r) / two_c});
      }
    }
    for (const auto& z : roots) {
      if (f.breakpoints().empty() || on_closed_arc(z, f.piece_arc(i))) rec.points.push_back({i, z});
    }
  }
  return rec;
}

bool fixes_arc_pointwise(const ProjCircleMap& f, const ProjArc& arc) {
  if (f.breakpoints().empty()) return f.pieces()[0].is_scalar();
  std::vector<ProjPoint> pts{arc.from};
  for (const auto& b : f.breakpoints()) {
    if (arc.contains_interior(b)) pts.push_back(b);
  }
  std::sort(pts.begin() + 1, pts.end(), [&](const ProjPoint& u, const ProjPoint& v) {
    return cyclic_rank(arc.from, u) < cyclic_rank(arc.from, v);
  });
  pts.push_back(arc.to);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    ProjPoint s = make_arc(pts[i], pts[i + 1], false, false).interior_point();
    if (!f.pieces()[f.piece_index(s)].is_scalar()) return false;
  }
  return true;
}

namespace {

struct ProjLine : ProjOps {
  bool is_identity(const ProjCircleMap& f) const { return f.is_identity(); }
  IntervalSet support(const ProjCircleMap& f) const {
    if (f.is_identity()) return {};
    if (f.breakpoints().empty()) throw InternalInconsistency("global Mobius map in the line chart");
    std::vector<Interval> parts;
    for (std::size_t i = 0; i < f.pieces().size(); ++i) {
      if (f.pieces()[i].is_scalar()) continue;
      ProjArc a = f.piece_arc(i);
      if (a.from.is_inf() || a.to.is_inf() || a.to < a.from) {
        throw InternalInconsistency("map moves points near infinity in the line chart");
      }
      parts.push_back({a.from.x(), a.to.x()});
    }
    return IntervalSet(std::move(parts));
  }
  Rational apply(const ProjCircleMap& f, const Rational& x) const {
    ProjPoint y = f(ProjPoint(x));
    if (y.is_inf()) throw InternalInconsistency("finite point sent to infinity in the line chart");
    return y.x();
  }
};

// Chart z -> 1/(m - z) for an interior point m of the arc (identity if m is
// infinity).
Mat2 line_chart(const ProjArc& arc) {
  ProjPoint m = arc.interior_point();
  if (m.is_inf()) return Mat2::identity();
  return {0, 1, -1, m.x()};
}

ProjCircleMap conjugate(const Mat2& t, const ProjCircleMap& f) {
  return compose_proj(ProjCircleMap::global(t), compose_proj(f, ProjCircleMap::global(t.adjugate())));
}

const Word kCommutator = Word::parse("abAB");

void require_h_pair(const ProjCircleMap& f, const ProjCircleMap& g, const ProjArc& arc) {
  if (!fixes_arc_pointwise(f, arc) || !fixes_arc_pointwise(g, arc)) {
    throw PreconditionError("both maps must fix the arc " + arc.str() + " pointwise");
  }
}

}  // namespace

Certificate classify_H_pair(const ProjCircleMap& f, const ProjCircleMap& g, const ProjArc& arc,
                            int depth) {
  using detail::CertificateIssuer;
  require_h_pair(f, g, arc);
  if (evaluate_word(kCommutator, f, g, ProjOps{}).is_identity()) {
    return CertificateIssuer::issue(CertKind::Abelian, {{"commutator", kCommutator.str()}},
                                    {"commutator abAB evaluates structurally to the identity"});
  }
  Mat2 t = line_chart(arc);
  ProjCircleMap fc = conjugate(t, f), gc = conjugate(t, g);
  ProjPoint lo = mobius(t, arc.to), hi = mobius(t, arc.from);
  auto inside = [&](const IntervalSet& s) { return lo.x() < *s.min() && *s.max() < hi.x(); };
  auto res = detail::zk_search(ProjLine{}, fc, gc, 3, depth, inside);
  using S = detail::ZkOutcome::Status;
  if (res.status != S::Found) return CertificateIssuer::inconclusive(res.reason, {}, res.log);
  nlohmann::json payload;
  payload["k"] = 3;
  payload["chart"] = to_json(t);
  payload["base_word"] = res.base.str();
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : res.displacements) hs.push_back(h.str());
  payload["displacements"] = hs;
  nlohmann::json ws = nlohmann::json::array();
  for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
    ws.push_back({{"word", res.witnesses[i].str()}, {"support", to_json(res.supports[i])}});
  }
  payload["witnesses"] = ws;
  res.log.insert(res.log.begin(), "chart " + t.str() + " sends the fixed arc through infinity");
  return CertificateIssuer::issue(CertKind::ZkWitness, std::move(payload), std::move(res.log));
}

VerifyReport verify_proj_certificate(const nlohmann::json& cert, const ProjCircleMap& f,
                                     const ProjCircleMap& g, const ProjArc& arc) {
  VerifyReport rep;
  CertKind kind = cert_kind_from_string(cert.at("kind").get<std::string>());
  const auto& p = cert.at("payload");
  if (!fixes_arc_pointwise(f, arc) || !fixes_arc_pointwise(g, arc)) {
    rep.log.push_back("pair does not fix the arc pointwise");
    return rep;
  }
  switch (kind) {
    case CertKind::Abelian:
      rep.ok = evaluate_word(kCommutator, f, g, ProjOps{}).is_identity();
      rep.log.push_back(std::string("[f,g] ") + (rep.ok ? "is" : "is NOT") + " the identity");
      break;
    case CertKind::ZkWitness: {
      Mat2 t = mat2_from_json(p.at("chart"));
      if (t != line_chart(arc)) {
        rep.log.push_back("chart " + t.str() + " is not the chart of the arc");
        break;
      }
      ProjCircleMap fc = conjugate(t, f), gc = conjugate(t, g);
      std::vector<Word> ws;
      std::vector<IntervalSet> recorded;
      for (const auto& e : p.at("witnesses")) {
        ws.push_back(Word::parse(e.at("word").get<std::string>()));
        recorded.push_back(intervals_from_json(e.at("support")));
      }
      std::vector<IntervalSet> sups;
      rep.ok = ws.size() >= 2 && detail::verify_witnesses(ProjLine{}, fc, gc, ws, &sups, rep.log);
      if (rep.ok && sups != recorded) {
        rep.ok = false;
        rep.log.push_back("recorded supports do not match");
      }
      break;
    }
    case CertKind::Relation: {
      Word w = Word::parse(p.at("word").get<std::string>());
      rep.ok = !w.empty() && evaluate_word(w, f, g, ProjOps{}).is_identity();
      rep.log.push_back("relation " + w.str() + (rep.ok ? " verified" : " FAILED"));
      break;
    }
    default:
      rep.ok = kind == CertKind::Inconclusive;
      rep.log.push_back("certificate kind " + to_string(kind) + " carries no claim to verify");
  }
  return rep;
}

}  // namespace plg
