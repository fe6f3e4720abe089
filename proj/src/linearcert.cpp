#include "plg/linearcert.hpp"

#include <array>
#include <optional>
#include <thread>

#include "issuer.hpp"
#include "plg/errors.hpp"
#include "plg/json_io.hpp"
#include "plg/word.hpp"

namespace plg {

ProjArc mobius_arc_image(const Mat2& m, const ProjArc& arc) {
  ProjPoint u = mobius(m, arc.from), v = mobius(m, arc.to);
  ProjPoint s = mobius(m, arc.interior_point());
  ProjArc fwd{u, v, arc.from_closed, arc.to_closed};
  if (fwd.contains_interior(s)) return fwd;
  return {v, u, arc.to_closed, arc.from_closed};
}

namespace {

struct Inclusion {
  std::string name;
  const Mat2* m;
  const ProjArc* src;
  const ProjArc* dst;
};

}  // namespace

Certificate pingpong_check(const Mat2& a, const Mat2& b, const PingPongData& d) {
  using detail::CertificateIssuer;
  if (a.det().sign() <= 0 || b.det().sign() <= 0) {
    throw PreconditionError("ping-pong needs det A, det B > 0");
  }
  const ProjArc* arcs[4] = {&d.r_a, &d.l_a, &d.r_b, &d.l_b};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!interiors_disjoint(*arcs[i], *arcs[j])) {
        throw PreconditionError("ping-pong arcs " + arcs[i]->str() + " and " + arcs[j]->str() + " overlap");
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 2; j < 4; ++j) {
      if (!arcs_disjoint(*arcs[i], *arcs[j])) {
        throw PreconditionError("X_A and X_B meet at an endpoint");
      }
    }
  }
  Mat2 ai = a.inverse(), bi = b.inverse();
  std::vector<Inclusion> incl{
      {"A(R_B) in R_A", &a, &d.r_b, &d.r_a},    {"A(L_B) in R_A", &a, &d.l_b, &d.r_a},
      {"A(R_A) in R_A", &a, &d.r_a, &d.r_a},    {"A^-1(R_B) in L_A", &ai, &d.r_b, &d.l_a},
      {"A^-1(L_B) in L_A", &ai, &d.l_b, &d.l_a}, {"A^-1(L_A) in L_A", &ai, &d.l_a, &d.l_a},
      {"B(R_A) in R_B", &b, &d.r_a, &d.r_b},    {"B(L_A) in R_B", &b, &d.l_a, &d.r_b},
      {"B(R_B) in R_B", &b, &d.r_b, &d.r_b},    {"B^-1(R_A) in L_B", &bi, &d.r_a, &d.l_b},
      {"B^-1(L_A) in L_B", &bi, &d.l_a, &d.l_b}, {"B^-1(L_B) in L_B", &bi, &d.l_b, &d.l_b},
  };
  std::vector<std::string> log;
  for (const auto& in : incl) {
    ProjArc img = mobius_arc_image(*in.m, *in.src);
    bool ok = arc_subset(img, *in.dst);
    log.push_back(in.name + ": " + img.str() + (ok ? " is inside " : " is NOT inside ") + in.dst->str());
    if (!ok) {
      return CertificateIssuer::inconclusive("ping-pong inclusion fails",
                                             {{"failed_inclusion", in.name}}, log);
    }
  }
  nlohmann::json arcs_json{{"R_A", to_json(d.r_a)}, {"L_A", to_json(d.l_a)},
                           {"R_B", to_json(d.r_b)}, {"L_B", to_json(d.l_b)}};
  return CertificateIssuer::issue(CertKind::Free,
                                  {{"A", to_json(a)}, {"B", to_json(b)}, {"arcs", arcs_json}},
                                  std::move(log));
}

namespace {

// Integer matrix entries; value of a letter is scale * m.
using I64Mat = std::array<std::int64_t, 4>;
using ZMat = std::array<mpz_class, 4>;

bool mul_checked(const I64Mat& x, const I64Mat& y, I64Mat& out) {
  std::int64_t p, q;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (__builtin_mul_overflow(x[2 * r], y[c], &p) || __builtin_mul_overflow(x[2 * r + 1], y[2 + c], &q) ||
          __builtin_add_overflow(p, q, &out[2 * r + c])) {
        return false;
      }
    }
  }
  return true;
}

ZMat mul(const ZMat& x, const ZMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

template <class M>
bool is_scalar_int(const M& m) {
  return m[1] == 0 && m[2] == 0 && m[0] == m[3];
}

struct LetterData {
  ZMat z;
  std::optional<I64Mat> small;
};

// Primitive integer matrix proportional to m.
ZMat integer_form(const Mat2& m) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), m.a.den().get_mpz_t(), m.b.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.c.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.d.den().get_mpz_t());
  Mat2 s = Rational(l, 1) * m;
  return {s.a.num(), s.b.num(), s.c.num(), s.d.num()};
}

class RelationSearch {
 public:
  RelationSearch(const Mat2& a, const Mat2& b, const RelationSearchOptions& opt)
      : opt_(opt), a_(a), b_(b) {
    Mat2 gens[4] = {a, a.adjugate(), b, b.adjugate()};
    for (int l = 0; l < 4; ++l) {
      letters_[l].z = integer_form(gens[l]);
      bool fits = true;
      I64Mat s{};
      for (int k = 0; k < 4; ++k) {
        fits = fits && letters_[l].z[k].fits_slong_p();
        if (fits) s[k] = letters_[l].z[k].get_si();
      }
      if (fits) letters_[l].small = s;
    }
  }

  // Best relation whose first letter is `first`, bounded by max_len.
  std::optional<std::vector<Letter>> run(int first) {
    best_.reset();
    bound_ = opt_.max_len;
    cur_.assign(1, static_cast<Letter>(first));
    const auto& ld = letters_[first];
    if (ld.small) {
      dfs_small(*ld.small);
    } else {
      dfs_big(ld.z);
    }
    return best_;
  }

 private:
  bool accept(bool scalar) {
    if (!scalar) return false;
    Word w = Word::reduce(cur_);
    Mat2 v = evaluate_word(w, a_, b_, Mat2Ops{});
    bool rel = opt_.projective ? v.is_scalar() : v.is_identity();
    if (rel) {
      // depth-first order visits equal-length words in enumeration order
      best_ = cur_;
      bound_ = static_cast<int>(cur_.size()) - 1;
    }
    return rel;
  }

  template <class Step>
  void extend(Step&& step) {
    if (static_cast<int>(cur_.size()) >= bound_) return;
    for (int l = 0; l < 4; ++l) {
      Letter x = static_cast<Letter>(l);
      if (cur_.back() == inverse(x)) continue;
      cur_.push_back(x);
      step(l);
      cur_.pop_back();
      if (static_cast<int>(cur_.size()) >= bound_) return;
    }
  }

  void dfs_small(const I64Mat& m) {
    if (accept(is_scalar_int(m))) return;
    extend([&](int l) {
      I64Mat next;
      if (letters_[l].small && mul_checked(m, *letters_[l].small, next)) {
        dfs_small(next);
      } else {
        ZMat zm{mpz_class(static_cast<long>(m[0])), mpz_class(static_cast<long>(m[1])),
                mpz_class(static_cast<long>(m[2])), mpz_class(static_cast<long>(m[3]))};
        dfs_big(mul(zm, letters_[l].z));
      }
    });
  }

  void dfs_big(const ZMat& m) {
    if (accept(is_scalar_int(m))) return;
    extend([&](int l) { dfs_big(mul(m, letters_[l].z)); });
  }

  RelationSearchOptions opt_;
  Mat2 a_, b_;
  LetterData letters_[4];
  std::vector<Letter> cur_;
  std::optional<std::vector<Letter>> best_;
  int bound_ = 0;
};

bool better(const std::vector<Letter>& u, const std::vector<Letter>& v) {
  return shortlex_less(Word::reduce(u), Word::reduce(v));
}

}  // namespace

Certificate matrix_relation_search(const Mat2& a, const Mat2& b, const RelationSearchOptions& opt) {
  using detail::CertificateIssuer;
  if (a.det().is_zero() || b.det().is_zero()) {
    throw PreconditionError("relation search needs invertible matrices");
  }
  std::optional<std::vector<Letter>> results[4];
  auto work = [&](int first) {
    RelationSearch s(a, b, opt);
    results[first] = s.run(first);
  };
  if (opt.max_len >= 1) {
    if (opt.jobs > 1) {
      std::vector<std::thread> pool;
      for (int l = 0; l < 4; ++l) pool.emplace_back(work, l);
      for (auto& t : pool) t.join();
    } else {
      for (int l = 0; l < 4; ++l) work(l);
    }
  }
  std::optional<std::vector<Letter>> best;
  for (int l = 0; l < 4; ++l) {
    if (results[l] && (!best || better(*results[l], *best))) best = results[l];
  }
  std::string mode = opt.projective ? "projective" : "linear";
  if (!best) {
    return CertificateIssuer::inconclusive(
        "no " + mode + " relation of length <= " + std::to_string(opt.max_len),
        {{"max_len", opt.max_len}, {"projective", opt.projective}},
        {"searched all reduced words of length 1.." + std::to_string(opt.max_len)});
  }
  Word w = Word::reduce(*best);
  Mat2 v = evaluate_word(w, a, b, Mat2Ops{});
  std::vector<std::string> log{"shortest " + mode + " relation " + w.str() + " evaluates to " + v.str()};
  return CertificateIssuer::issue(CertKind::Relation,
                                  {{"word", w.str()},
                                   {"length", w.size()},
                                   {"projective", opt.projective},
                                   {"value", to_json(v)}},
                                  std::move(log));
}

VerifyReport verify_linear_certificate(const nlohmann::json& cert, const Mat2& a, const Mat2& b) {
  VerifyReport rep;
  CertKind kind = cert_kind_from_string(cert.at("kind").get<std::string>());
  const auto& p = cert.at("payload");
  if (kind == CertKind::Relation) {
    Word w = Word::parse(p.at("word").get<std::string>());
    Mat2 v = evaluate_word(w, a, b, Mat2Ops{});
    bool proj = p.value("projective", true);
    rep.ok = !w.empty() && (proj ? v.is_scalar() : v.is_identity());
    rep.log.push_back(w.str() + " evaluates to " + v.str() + (rep.ok ? "" : ", not a relation"));
  } else if (kind == CertKind::Free) {
    const auto& arcs = p.at("arcs");
    PingPongData d{arc_from_json(arcs.at("R_A")), arc_from_json(arcs.at("L_A")),
                   arc_from_json(arcs.at("R_B")), arc_from_json(arcs.at("L_B"))};
    Certificate again = pingpong_check(a, b, d);
    rep.ok = again.kind() == CertKind::Free;
    rep.log = again.verification_log();
  } else {
    rep.ok = kind == CertKind::Inconclusive;
    rep.log.push_back("certificate kind " + to_string(kind) + " carries no claim to verify");
  }
  return rep;
}

}  // namespace plg
