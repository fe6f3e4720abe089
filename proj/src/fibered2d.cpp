#include "plg/fibered2d.hpp"

#include <algorithm>

#include "issuer.hpp"
#include "plg/errors.hpp"

namespace plg {

namespace {

Rational lerp(const Rational& at0, const Rational& at1, const Rational& x0, const Rational& x1,
              const Rational& x) {
  if (x == x0) return at0;
  if (x == x1) return at1;
  return at0 + (at1 - at0) * (x - x0) / (x1 - x0);
}

std::vector<Rational> image_lines(const std::vector<Rational>& l, const std::vector<Rational>& s) {
  std::vector<Rational> m(l.size());
  for (std::size_t j = 0; j + 1 < l.size(); ++j) m[j + 1] = m[j] + s[j] * (l[j + 1] - l[j]);
  return m;
}

std::vector<Rational> lines_at(const Slab& s, const Rational& x0, const Rational& x1,
                               const Rational& x) {
  std::vector<Rational> out(s.lo.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = lerp(s.lo[j], s.hi[j], x0, x1, x);
  return out;
}

PLMap1D slab_fiber(const Slab& s, const Rational& x0, const Rational& x1, const Rational& x) {
  auto l = lines_at(s, x0, x1, x);
  auto m = image_lines(l, s.slopes);
  std::vector<BreakPoint> pts;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (!pts.empty() && pts.back().x == l[j]) continue;
    pts.push_back({l[j], m[j]});
  }
  return PLMap1D::make(std::move(pts));
}

// Index of the slab containing x (the left one at an interior break).
std::size_t slab_index(const std::vector<Rational>& xs, const Rational& x) {
  auto it = std::lower_bound(xs.begin() + 1, xs.end(), x);
  return static_cast<std::size_t>(it - xs.begin()) - 1;
}

void remove_redundant_lines(Slab& s) {
  for (std::size_t j = 1; j + 1 < s.lo.size();) {
    if (s.slopes[j - 1] == s.slopes[j]) {
      s.lo.erase(s.lo.begin() + static_cast<long>(j));
      s.hi.erase(s.hi.begin() + static_cast<long>(j));
      s.slopes.erase(s.slopes.begin() + static_cast<long>(j));
    } else {
      ++j;
    }
  }
}

bool mergeable(const Slab& p, const Slab& q, const Rational& x0, const Rational& x1,
               const Rational& x2) {
  if (p.slopes != q.slopes || p.hi != q.lo) return false;
  for (std::size_t j = 0; j < p.lo.size(); ++j) {
    if ((p.hi[j] - p.lo[j]) * (x2 - x1) != (q.hi[j] - q.lo[j]) * (x1 - x0)) return false;
  }
  return true;
}

struct Line {
  Rational at_p, at_q, at_mid;
};

}  // namespace

FiberedMap2D::FiberedMap2D() : xs_{0, 1}, slabs_{Slab{{0, 1}, {0, 1}, {1}}} {}

FiberedMap2D FiberedMap2D::make(std::vector<Rational> xs, std::vector<Slab> slabs) {
  if (xs.size() < 2 || xs.front() != 0 || xs.back() != 1 || slabs.size() + 1 != xs.size()) {
    throw ValidationError("OrderingViolation", "x_breaks must run 0 < ... < 1, one slab per gap");
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) throw ValidationError("OrderingViolation", "x_breaks not increasing");
  }
  for (const auto& s : slabs) {
    std::size_t n = s.lo.size();
    if (n < 2 || s.hi.size() != n || s.slopes.size() + 1 != n) {
      throw ValidationError("OrderingViolation", "slab needs r+1 breaklines and r slopes");
    }
    if (s.lo.front() != 0 || s.hi.front() != 0 || s.lo.back() != 1 || s.hi.back() != 1) {
      throw ValidationError("OrderingViolation", "breaklines 0 and r must be the square's edges");
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (s.lo[j] > s.lo[j + 1] || s.hi[j] > s.hi[j + 1] ||
          (s.lo[j] == s.lo[j + 1] && s.hi[j] == s.hi[j + 1])) {
        throw ValidationError("OrderingViolation", "breaklines must be ordered inside the slab");
      }
      if (s.slopes[j].sign() <= 0) throw ValidationError("OrderingViolation", "cell slope <= 0");
    }
    if (image_lines(s.lo, s.slopes).back() != 1 || image_lines(s.hi, s.slopes).back() != 1) {
      throw ValidationError("TopBoundaryViolation", "top edge is not mapped to itself");
    }
  }
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (slab_fiber(slabs[i - 1], xs[i - 1], xs[i], xs[i]) !=
        slab_fiber(slabs[i], xs[i], xs[i + 1], xs[i])) {
      throw ValidationError("ContinuityViolation",
                            "slabs disagree on the leaf x = " + xs[i].str());
    }
  }
  for (auto& s : slabs) remove_redundant_lines(s);
  std::vector<Rational> cx{xs[0]};
  std::vector<Slab> cs;
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    if (!cs.empty() && mergeable(cs.back(), slabs[i], cx[cx.size() - 2], cx.back(), xs[i + 1])) {
      cs.back().hi = slabs[i].hi;
      cx.back() = xs[i + 1];
    } else {
      cs.push_back(std::move(slabs[i]));
      cx.push_back(xs[i + 1]);
    }
  }
  return FiberedMap2D(std::move(cx), std::move(cs));
}

Point2 FiberedMap2D::operator()(const Point2& p) const {
  if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) throw DomainError("point outside the square");
  std::size_t i = slab_index(xs_, p.x);
  const Slab& s = slabs_[i];
  auto l = lines_at(s, xs_[i], xs_[i + 1], p.x);
  auto m = image_lines(l, s.slopes);
  std::size_t j = 0;
  while (j + 2 < l.size() && (l[j] == l[j + 1] || l[j + 1] < p.y)) ++j;
  return {p.x, m[j] + s.slopes[j] * (p.y - l[j])};
}

FiberedMap2D product_map(const PLMap1D& h) {
  const auto& pts = h.breakpoints();
  Slab s;
  for (const auto& p : pts) {
    s.lo.push_back(p.x);
    s.hi.push_back(p.x);
  }
  for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
    s.slopes.push_back((pts[j + 1].y - pts[j].y) / (pts[j + 1].x - pts[j].x));
  }
  return FiberedMap2D::make({0, 1}, {std::move(s)});
}

PLMap1D fiber_restriction(const FiberedMap2D& f, const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("fiber_restriction outside [0,1]");
  const auto& xs = f.x_breaks();
  std::size_t i = slab_index(xs, x);
  return slab_fiber(f.slabs()[i], xs[i], xs[i + 1], x);
}

namespace {

// Composition of single slabs over [u, v]: g first, then f.
void compose_slab(const Slab& fs, const Slab& gs, const Rational& u, const Rational& v,
                  std::vector<Rational>& xs_out, std::vector<Slab>& out) {
  const std::size_t rf = fs.slopes.size(), rg = gs.slopes.size();
  auto mg_u = image_lines(gs.lo, gs.slopes);
  auto mg_v = image_lines(gs.hi, gs.slopes);
  std::vector<Rational> cuts{u, v};
  for (std::size_t k = 1; k < rf; ++k) {
    for (std::size_t j = 1; j < rg; ++j) {
      Rational du = fs.lo[k] - mg_u[j], dv = fs.hi[k] - mg_v[j];
      if (du.sign() * dv.sign() < 0) cuts.push_back(u + (v - u) * du / (du - dv));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Rational& p = cuts[c];
    const Rational& q = cuts[c + 1];
    Rational mid = midpoint(p, q);
    auto at = [&](const Rational& a0, const Rational& a1) {
      return Line{lerp(a0, a1, u, v, p), lerp(a0, a1, u, v, q), lerp(a0, a1, u, v, mid)};
    };
    std::vector<Line> gl, gm, fl;
    for (std::size_t j = 0; j <= rg; ++j) {
      gl.push_back(at(gs.lo[j], gs.hi[j]));
      gm.push_back(at(mg_u[j], mg_v[j]));
    }
    for (std::size_t k = 0; k <= rf; ++k) fl.push_back(at(fs.lo[k], fs.hi[k]));

    std::vector<Line> merged = gm;
    merged.insert(merged.end(), fl.begin(), fl.end());
    std::sort(merged.begin(), merged.end(),
              [](const Line& a, const Line& b) { return a.at_mid < b.at_mid; });
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const Line& a, const Line& b) { return a.at_mid == b.at_mid; }),
                 merged.end());

    auto cell_below = [](const std::vector<Line>& ls, const Rational& val) {
      std::size_t j = 0;
      while (j + 2 < ls.size() && ls[j + 1].at_mid <= val) ++j;
      return j;
    };
    Slab s;
    for (const auto& L : merged) {
      std::size_t j = cell_below(gm, L.at_mid);
      s.lo.push_back(gl[j].at_p + (L.at_p - gm[j].at_p) / gs.slopes[j]);
      s.hi.push_back(gl[j].at_q + (L.at_q - gm[j].at_q) / gs.slopes[j]);
    }
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
      Rational gap = midpoint(merged[i].at_mid, merged[i + 1].at_mid);
      std::size_t j = cell_below(gm, gap), k = cell_below(fl, gap);
      s.slopes.push_back(fs.slopes[k] * gs.slopes[j]);
    }
    out.push_back(std::move(s));
    xs_out.push_back(q);
  }
}

Slab restrict_slab(const Slab& s, const Rational& x0, const Rational& x1, const Rational& u,
                   const Rational& v) {
  return {lines_at(s, x0, x1, u), lines_at(s, x0, x1, v), s.slopes};
}

}  // namespace

FiberedMap2D compose_fibered(const FiberedMap2D& f, const FiberedMap2D& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  std::vector<Rational> xs = f.x_breaks();
  xs.insert(xs.end(), g.x_breaks().begin(), g.x_breaks().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> out_xs{0};
  std::vector<Slab> out;
  const auto& fx = f.x_breaks();
  const auto& gx = g.x_breaks();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    std::size_t fi = slab_index(fx, xs[i + 1]);
    std::size_t gi = slab_index(gx, xs[i + 1]);
    Slab fs = restrict_slab(f.slabs()[fi], fx[fi], fx[fi + 1], xs[i], xs[i + 1]);
    Slab gs = restrict_slab(g.slabs()[gi], gx[gi], gx[gi + 1], xs[i], xs[i + 1]);
    compose_slab(fs, gs, xs[i], xs[i + 1], out_xs, out);
  }
  return FiberedMap2D::make(std::move(out_xs), std::move(out));
}

FiberedMap2D invert_fibered(const FiberedMap2D& f) {
  std::vector<Slab> out;
  for (const auto& s : f.slabs()) {
    Slab t{image_lines(s.lo, s.slopes), image_lines(s.hi, s.slopes), {}};
    for (const auto& sl : s.slopes) t.slopes.push_back(sl.inverse());
    out.push_back(std::move(t));
  }
  return FiberedMap2D::make(f.x_breaks(), std::move(out));
}

FiberedMap2D vertical_bump(const Rational& a, const Rational& b, const Point2& y,
                           const Rational& t, const Rational& lo, const Rational& hi) {
  const Rational& c = y.x;
  const Rational& h = y.y;
  if (t.is_zero() || a < 0 || !(a < c) || !(c < b) || b > 1 || lo < 0 || hi > 1 ||
      !(lo < min(h, h + t)) || !(max(h, h + t) < hi)) {
    throw PreconditionError("vertical_bump preconditions violated");
  }
  Rational s1 = (h + t - lo) / (h - lo);
  Rational s2 = (hi - h - t) / (hi - h);
  std::vector<Rational> xs;
  std::vector<Slab> slabs;
  Slab id{{0, 1}, {0, 1}, {1}};
  xs.push_back(0);
  if (a > 0) {
    slabs.push_back(id);
    xs.push_back(a);
  }
  slabs.push_back(Slab{{0, h, h, h, 1}, {0, lo, h, hi, 1}, {1, s1, s2, 1}});
  xs.push_back(c);
  slabs.push_back(Slab{{0, lo, h, hi, 1}, {0, h, h, h, 1}, {1, s1, s2, 1}});
  xs.push_back(b);
  if (b < 1) {
    slabs.push_back(id);
    xs.push_back(1);
  }
  return FiberedMap2D::make(std::move(xs), std::move(slabs));
}

std::optional<Strip> identity_strip(const FiberedMap2D& f, const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("identity_strip outside [0,1]");
  const auto& xs = f.x_breaks();
  const auto& ss = f.slabs();
  auto is_id = [&](std::size_t i) { return ss[i].slopes.size() == 1; };
  std::size_t i = slab_index(xs, x);
  if (xs[i] < x && x < xs[i + 1]) {
    if (is_id(i)) return Strip{xs[i], xs[i + 1]};
    return std::nullopt;
  }
  if (x == 0 && is_id(0)) return Strip{0, xs[1]};
  if (x == 1 && is_id(ss.size() - 1)) return Strip{xs[xs.size() - 2], 1};
  return std::nullopt;
}

std::optional<Box> support_box(const FiberedMap2D& f) {
  std::optional<Box> box;
  const auto& xs = f.x_breaks();
  for (std::size_t i = 0; i < f.slabs().size(); ++i) {
    const Slab& s = f.slabs()[i];
    auto ml = image_lines(s.lo, s.slopes), mh = image_lines(s.hi, s.slopes);
    for (std::size_t j = 0; j < s.slopes.size(); ++j) {
      if (s.slopes[j] == 1 && ml[j] == s.lo[j] && mh[j] == s.hi[j]) continue;
      Rational t0 = min(s.lo[j], s.hi[j]), t1 = max(s.lo[j + 1], s.hi[j + 1]);
      if (!box) {
        box = Box{xs[i], xs[i + 1], t0, t1};
      } else {
        box->x0 = min(box->x0, xs[i]);
        box->x1 = max(box->x1, xs[i + 1]);
        box->t0 = min(box->t0, t0);
        box->t1 = max(box->t1, t1);
      }
    }
  }
  return box;
}

namespace {

// Distinct reduced words of length 1..max_len whose fiber map at x is the
// identity, in shortlex order.
std::vector<Word> fiber_trivial_words(const PLMap1D& fx, const PLMap1D& gx, int max_len) {
  const PLMap1D gen[4] = {fx, invert_pl(fx), gx, invert_pl(gx)};
  std::vector<Word> out;
  std::vector<Letter> cur;
  std::vector<PLMap1D> val{PLMap1D()};
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int l = 0; l < 4; ++l) {
      Letter x = static_cast<Letter>(l);
      if (!cur.empty() && cur.back() == inverse(x)) continue;
      cur.push_back(x);
      val.push_back(compose_pl(val.back(), gen[l]));
      if (val.back().is_identity()) out.push_back(Word::reduce(cur));
      self(self);
      val.pop_back();
      cur.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(), [](const Word& u, const Word& v) { return shortlex_less(u, v); });
  return out;
}

std::optional<Strip> strip_of(const Word& w, const FiberedMap2D& f, const FiberedMap2D& g,
                              const Rational& x) {
  return identity_strip(evaluate_word(w, f, g, FiberedOps{}), x);
}

constexpr std::size_t kMaxSingleTrials = 256;
constexpr std::size_t kPairPool = 12;

}  // namespace

std::optional<StripIdentityWitness> neighborhood_identity_word(const FiberedMap2D& f,
                                                               const FiberedMap2D& g,
                                                               const Rational& x, int max_len) {
  if (x < 0 || x > 1) throw DomainError("neighborhood_identity_word outside [0,1]");
  if (max_len < 1) return std::nullopt;
  auto cands = fiber_trivial_words(fiber_restriction(f, x), fiber_restriction(g, x), max_len);
  if (cands.empty()) return std::nullopt;

  // probe leaves on both sides to try likely candidates first
  std::vector<Rational> xs = f.x_breaks();
  xs.insert(xs.end(), g.x_breaks().begin(), g.x_breaks().end());
  Rational gap = 1;
  for (const auto& b : xs) {
    if (b != x) gap = min(gap, (b - x).abs());
  }
  std::vector<Rational> probes;
  if (x > 0) probes.push_back(x - gap / 4);
  if (x < 1) probes.push_back(x + gap / 4);
  std::vector<PLMap1D> pf, pg;
  for (const auto& p : probes) {
    pf.push_back(fiber_restriction(f, p));
    pg.push_back(fiber_restriction(g, p));
  }
  auto probes_trivial = [&](const Word& w) {
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (!evaluate_word(w, pf[i], pg[i], PL1DOps{}).is_identity()) return false;
    }
    return true;
  };
  std::stable_partition(cands.begin(), cands.end(), probes_trivial);

  std::size_t trials = 0;
  for (const auto& w : cands) {
    if (++trials > kMaxSingleTrials) break;
    if (auto s = strip_of(w, f, g, x)) return StripIdentityWitness{w, *s};
  }
  std::vector<Word> pool(cands.begin(), cands.begin() + static_cast<long>(std::min(
                                                          cands.size(), kPairPool)));
  std::sort(pool.begin(), pool.end(), [](const Word& u, const Word& v) { return shortlex_less(u, v); });
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      Word c = commutator(pool[i], pool[j]);
      if (c.empty()) continue;
      if (auto s = strip_of(c, f, g, x)) return StripIdentityWitness{c, *s};
    }
  }
  return std::nullopt;
}

namespace {

nlohmann::json strip_json(const StripIdentityWitness& w) {
  return {{"word", w.word.str()}, {"lo", w.strip.lo.str()}, {"hi", w.strip.hi.str()}};
}

constexpr int kMaxSweepSteps = 64;

}  // namespace

Certificate find_relation_fibered(const FiberedMap2D& f, const FiberedMap2D& g, int max_len) {
  using detail::CertificateIssuer;
  std::vector<std::string> log;
  std::vector<StripIdentityWitness> ws;
  Rational x = 0;
  for (int step = 0;; ++step) {
    if (step == kMaxSweepSteps) {
      return CertificateIssuer::inconclusive("sweep did not reach x = 1", {}, log);
    }
    auto w = neighborhood_identity_word(f, g, x, max_len);
    if (!w) {
      return CertificateIssuer::inconclusive("no strip witness at x = " + x.str(),
                                             {{"x", x.str()}}, log);
    }
    log.push_back(w->word.str() + " is the identity on strip (" + w->strip.lo.str() + ", " +
                  w->strip.hi.str() + ")");
    ws.push_back(*w);
    if (w->strip.hi == 1) break;
    x = w->strip.hi;
  }

  // Strips overlap only at shared endpoints, so consecutive words are merged
  // through commutators; a commutator of words with a common power collapses.
  nlohmann::json strips = nlohmann::json::array();
  for (const auto& w : ws) strips.push_back(strip_json(w));
  Word acc = ws.front().word;
  Rational hi = ws.front().strip.hi;
  for (std::size_t i = 1; i < ws.size(); ++i) {
    const Word& next = ws[i].word;
    hi = ws[i].strip.hi;
    if (next == acc || next == acc.inverse()) continue;
    Word c = commutator(acc, next);
    if (c.empty()) {
      return CertificateIssuer::inconclusive("strip witnesses " + acc.str() + " and " +
                                                 next.str() + " have a trivial commutator",
                                             {{"strips", strips}}, log);
    }
    log.push_back("merged into [" + acc.str() + ", " + next.str() + "] up to x = " + hi.str());
    acc = std::move(c);
  }
  if (!evaluate_word(acc, f, g, FiberedOps{}).is_identity()) {
    throw InternalInconsistency("merged strip relation " + acc.str() + " is not the identity");
  }
  log.push_back("relation " + acc.str() + " evaluates exactly to the identity");
  nlohmann::json payload{{"word", acc.str()}, {"length", acc.size()}, {"strips", strips}};
  return CertificateIssuer::issue(CertKind::Relation, std::move(payload), std::move(log));
}

VerifyReport verify_fibered_certificate(const nlohmann::json& cert, const FiberedMap2D& f,
                                        const FiberedMap2D& g) {
  VerifyReport rep;
  CertKind kind = cert_kind_from_string(cert.at("kind").get<std::string>());
  if (kind == CertKind::Relation) {
    Word w = Word::parse(cert.at("payload").at("word").get<std::string>());
    bool id = evaluate_word(w, f, g, FiberedOps{}).is_identity();
    rep.ok = !w.empty() && id;
    rep.log.push_back("relation " + w.str() + (rep.ok ? " verified" : " FAILED"));
  } else {
    rep.ok = kind == CertKind::Inconclusive;
    rep.log.push_back("certificate kind " + to_string(kind) +
                      (rep.ok ? " carries no claim" : " is not issued for fibered pairs"));
  }
  return rep;
}

}  // namespace plg
