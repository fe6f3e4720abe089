#include "plg/structure1d.hpp"

#include "issuer.hpp"
#include "plg/errors.hpp"
#include "plg/json_io.hpp"
#include "zk_search.hpp"

namespace plg {

namespace {

struct PLLine : PL1DOps {
  bool is_identity(const PLMap1D& f) const { return f.is_identity(); }
  IntervalSet support(const PLMap1D& f) const { return plg::support(f); }
  Rational apply(const PLMap1D& f, const Rational& x) const { return f(x); }
};

const Word kCommutator = Word::parse("abAB");

nlohmann::json witnesses_json(const std::vector<Word>& ws, const std::vector<IntervalSet>& sups) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    arr.push_back({{"word", ws[i].str()}, {"support", to_json(sups[i])}});
  }
  return arr;
}

}  // namespace

PairAnalysis analyze_pair(const PLMap1D& f, const PLMap1D& g) {
  PairAnalysis out;
  out.common_fixed = support_fix(f).fixed.intersect(support_fix(g).fixed);
  out.components = out.common_fixed.complement_in(0, 1);
  return out;
}

Rational germ_trivial_radius(const PLMap1D& f, const PLMap1D& g, const Rational& x) {
  if (x < 0 || x > 1 || f(x) != x || g(x) != x) {
    throw PreconditionError("germ_trivial_radius needs x in fix(f) and fix(g)");
  }
  PLMap1D c = evaluate_word(kCommutator, f, g, PL1DOps{});
  auto comp = support_fix(c).fixed.component_of(x);
  if (!comp) throw InternalInconsistency("commutator moves a common fixed point");
  bool left_open = comp->lo > 0, right_open = comp->hi < 1;
  Rational r;
  if (!left_open && !right_open) {
    r = max(x, Rational(1) - x);
  } else if (!left_open) {
    r = comp->hi - x;
  } else if (!right_open) {
    r = x - comp->lo;
  } else {
    r = min(x - comp->lo, comp->hi - x);
  }
  if (r.sign() <= 0) {
    throw InternalInconsistency("commutator is not the identity near a common fixed point");
  }
  return r;
}

std::optional<Word> find_displacement(const PLMap1D& f, const PLMap1D& g, const Rational& a,
                                      const Rational& b, int depth) {
  if (!(a < b)) throw PreconditionError("find_displacement needs a < b");
  auto comps = analyze_pair(f, g).components;
  bool same = false;
  for (const auto& c : comps) same = same || (c.contains(a) && c.contains(b));
  if (!same) throw PreconditionError("a and b must lie in one component of the moved set");
  return detail::find_displacement_generic(PLLine{}, f, g, a, b, depth);
}

Certificate zk_witnesses(const PLMap1D& f, const PLMap1D& g, int k, int depth) {
  using detail::CertificateIssuer;
  if (k < 2) throw PreconditionError("zk_witnesses needs k >= 2");
  auto comps = analyze_pair(f, g).components;
  auto inside_one_component = [&](const IntervalSet& s) {
    for (const auto& c : comps) {
      if (c.lo < *s.min() && *s.max() < c.hi) return true;
    }
    return false;
  };
  auto res = detail::zk_search(PLLine{}, f, g, k, depth, inside_one_component);
  using S = detail::ZkOutcome::Status;
  if (res.status == S::Abelian) {
    return CertificateIssuer::inconclusive(res.reason, {{"hint", "AbelianCert"}}, res.log);
  }
  if (res.status == S::Exhausted) return CertificateIssuer::inconclusive(res.reason, {}, res.log);
  nlohmann::json payload;
  payload["k"] = k;
  payload["base_word"] = res.base.str();
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : res.displacements) hs.push_back(h.str());
  payload["displacements"] = hs;
  payload["witnesses"] = witnesses_json(res.witnesses, res.supports);
  return CertificateIssuer::issue(CertKind::ZkWitness, std::move(payload), std::move(res.log));
}

Certificate classify_pair(const PLMap1D& f, const PLMap1D& g, int depth) {
  using detail::CertificateIssuer;
  PLMap1D c = evaluate_word(kCommutator, f, g, PL1DOps{});
  if (c.is_identity()) {
    return CertificateIssuer::issue(CertKind::Abelian, {{"commutator", kCommutator.str()}},
                                    {"commutator abAB evaluates structurally to the identity"});
  }
  return zk_witnesses(f, g, 3, depth);
}

VerifyReport verify_pl_certificate(const nlohmann::json& cert, const PLMap1D& f,
                                   const PLMap1D& g) {
  VerifyReport rep;
  CertKind kind = cert_kind_from_string(cert.at("kind").get<std::string>());
  const auto& p = cert.at("payload");
  switch (kind) {
    case CertKind::Abelian: {
      bool id = evaluate_word(kCommutator, f, g, PL1DOps{}).is_identity();
      rep.log.push_back(std::string("[f,g] ") + (id ? "is" : "is NOT") + " the identity");
      rep.ok = id;
      break;
    }
    case CertKind::ZkWitness: {
      std::vector<Word> ws;
      std::vector<IntervalSet> recorded;
      for (const auto& e : p.at("witnesses")) {
        ws.push_back(Word::parse(e.at("word").get<std::string>()));
        recorded.push_back(intervals_from_json(e.at("support")));
      }
      std::vector<IntervalSet> sups;
      rep.ok = ws.size() >= 2 && detail::verify_witnesses(PLLine{}, f, g, ws, &sups, rep.log);
      if (rep.ok && sups != recorded) {
        rep.ok = false;
        rep.log.push_back("recorded supports do not match");
      }
      break;
    }
    case CertKind::Relation: {
      Word w = Word::parse(p.at("word").get<std::string>());
      bool id = evaluate_word(w, f, g, PL1DOps{}).is_identity();
      rep.ok = !w.empty() && id;
      rep.log.push_back("relation " + w.str() + (rep.ok ? " verified" : " FAILED"));
      break;
    }
    default:
      rep.log.push_back("certificate kind " + to_string(kind) + " carries no claim to verify");
      rep.ok = kind == CertKind::Inconclusive;
  }
  return rep;
}

}  // namespace plg
