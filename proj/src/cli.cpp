#include "plg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "plg/errors.hpp"
#include "plg/fibered2d.hpp"
#include "plg/json_io.hpp"
#include "plg/linearcert.hpp"
#include "plg/pa2d.hpp"
#include "plg/perturb.hpp"
#include "plg/pl1d.hpp"
#include "plg/projcircle.hpp"
#include "plg/structure1d.hpp"

namespace plg {

namespace {

using nlohmann::json;

struct Result {
  json body;
  int code = kExitOk;
};

using Handler = std::function<Result(const Job&)>;

void need_inputs(const Job& job, std::size_t n) {
  if (job.inputs.size() != n)
    throw ParseError(job.command + " expects " + std::to_string(n) + " positional argument(s), got " +
                     std::to_string(job.inputs.size()));
}

json input(const Job& job, std::size_t i) { return read_json_file(job.inputs.at(i)); }

int cert_code(const Certificate& c) { return c.inconclusive() ? kExitInconclusive : kExitOk; }

Result report(const VerifyReport& r) {
  return {{{"ok", r.ok}, {"log", r.log}}, r.ok ? kExitOk : kExitVerifyFailed};
}

Result cert_result(const Certificate& c) { return {c.to_json(), cert_code(c)}; }

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

// pl

Result pl_eval(const Job& job) {
  if (job.inputs.size() < 2) throw ParseError("pl eval expects a map and at least one point");
  PLMap1D f = pl_from_json(input(job, 0));
  json vals = json::array();
  for (std::size_t i = 1; i < job.inputs.size(); ++i) vals.push_back(to_json(f(Rational::parse(job.inputs[i]))));
  return {{{"values", vals}}};
}

Result pl_compose(const Job& job) {
  need_inputs(job, 2);
  return {to_json(compose_pl(pl_from_json(input(job, 0)), pl_from_json(input(job, 1))))};
}

Result pl_invert(const Job& job) {
  need_inputs(job, 1);
  return {to_json(invert_pl(pl_from_json(input(job, 0))))};
}

Result pl_support(const Job& job) {
  need_inputs(job, 1);
  auto sf = support_fix(pl_from_json(input(job, 0)));
  return {{{"support", to_json(sf.support)}, {"fixed", to_json(sf.fixed)}}};
}

Result pl_bump(const Job& job) {
  need_inputs(job, 4);
  std::vector<Rational> v;
  for (const auto& s : job.inputs) v.push_back(Rational::parse(s));
  return {to_json(bump_pl(v[0], v[1], v[2], v[3]))};
}

Result pl_random(const Job& job) {
  need_inputs(job, 0);
  return {to_json(random_pl(job.seed, job.breaks, 64))};
}

Result pl_classify(const Job& job) {
  need_inputs(job, 1);
  json in = input(job, 0);
  PLMap1D f = pl_from_json(in.at("f")), g = pl_from_json(in.at("g"));
  if (!job.verify.empty()) return report(verify_pl_certificate(read_json_file(job.verify), f, g));
  return cert_result(classify_pair(f, g, job.depth));
}

// fibered

Result fibered_compose(const Job& job) {
  need_inputs(job, 2);
  return {to_json(compose_fibered(fibered_from_json(input(job, 0)), fibered_from_json(input(job, 1))))};
}

Result fibered_fiber(const Job& job) {
  need_inputs(job, 2);
  return {to_json(fiber_restriction(fibered_from_json(input(job, 0)), Rational::parse(job.inputs[1])))};
}

Result fibered_relation(const Job& job) {
  need_inputs(job, 1);
  json in = input(job, 0);
  FiberedMap2D f = fibered_from_json(in.at("f")), g = fibered_from_json(in.at("g"));
  if (!job.verify.empty()) return report(verify_fibered_certificate(read_json_file(job.verify), f, g));
  return cert_result(find_relation_fibered(f, g, job.max_len));
}

// pa

Result pa_compose(const Job& job) {
  need_inputs(job, 2);
  return {to_json(compose_pa(pa_from_json(input(job, 0)), pa_from_json(input(job, 1))))};
}

Result pa_derivative_pair(const Job& job) {
  need_inputs(job, 1);
  json in = input(job, 0);
  Mat2 alpha = mat2_from_json(in.at("alpha")), beta = mat2_from_json(in.at("beta"));
  Point2 p = point_from_json(in.at("p"));
  Rational r = rational_from_json(in.at("r"));
  json out = in;
  out["f"] = to_json(prescribed_derivative_homeo(alpha, p, r));
  out["g"] = to_json(prescribed_derivative_homeo(beta, p, r));
  return {out};
}

Result pa_freecheck(const Job& job) {
  need_inputs(job, 1);
  json in = input(job, 0);
  Mat2 alpha = mat2_from_json(in.at("alpha")), beta = mat2_from_json(in.at("beta"));
  Point2 p = point_from_json(in.at("p"));
  Rational r = rational_from_json(in.at("r"));
  PAMap2D f = in.contains("f") ? pa_from_json(in.at("f")) : prescribed_derivative_homeo(alpha, p, r);
  PAMap2D g = in.contains("g") ? pa_from_json(in.at("g")) : prescribed_derivative_homeo(beta, p, r);
  auto chk = derivative_check(f, g, alpha, beta, p, job.max_len);
  bool ok = chk.mismatches.empty() && chk.identity_words.empty();
  return {{{"max_len", job.max_len},
           {"words_checked", chk.words_checked},
           {"mismatches", words_json(chk.mismatches)},
           {"identity_words", words_json(chk.identity_words)},
           {"ok", ok}},
          ok ? kExitOk : kExitVerifyFailed};
}

// matrix

Result matrix_relations(const Job& job) {
  need_inputs(job, 1);
  json in = input(job, 0);
  Mat2 a = mat2_from_json(in.at("A")), b = mat2_from_json(in.at("B"));
  if (!job.verify.empty()) return report(verify_linear_certificate(read_json_file(job.verify), a, b));
  RelationSearchOptions opt;
  opt.max_len = job.max_len;
  opt.projective = in.value("projective", true);
  opt.jobs = job.jobs;
  return cert_result(matrix_relation_search(a, b, opt));
}

Result matrix_pingpong(const Job& job) {
  need_inputs(job, 1);
  json in = input(job, 0);
  Mat2 a = mat2_from_json(in.at("A")), b = mat2_from_json(in.at("B"));
  if (!job.verify.empty()) return report(verify_linear_certificate(read_json_file(job.verify), a, b));
  const json& arcs = in.at("arcs");
  PingPongData d{arc_from_json(arcs.at("R_A")), arc_from_json(arcs.at("L_A")), arc_from_json(arcs.at("R_B")),
                 arc_from_json(arcs.at("L_B"))};
  Certificate c = pingpong_check(a, b, d);
  Result r = cert_result(c);
  if (c.inconclusive() && c.payload().contains("failed_inclusion")) r.code = kExitVerifyFailed;
  return r;
}

// proj

Result proj_compose(const Job& job) {
  need_inputs(job, 2);
  return {to_json(compose_proj(proj_from_json(input(job, 0)), proj_from_json(input(job, 1))))};
}

Result proj_fixedpoints(const Job& job) {
  need_inputs(job, 1);
  ProjCircleMap f = proj_from_json(input(job, 0));
  auto rec = fixed_points_proj(f);
  json pts = json::array();
  for (const auto& e : rec.points) pts.push_back({{"piece", e.piece}, {"point", to_json(e.point)}});
  json ids = json::array();
  for (auto i : rec.identity_pieces) ids.push_back(i);
  return {{{"points", pts}, {"identity_pieces", ids}}};
}

Result proj_classify_h(const Job& job) {
  need_inputs(job, 1);
  json in = input(job, 0);
  ProjCircleMap f = proj_from_json(in.at("f")), g = proj_from_json(in.at("g"));
  ProjArc arc = arc_from_json(in.at("arc"));
  if (!job.verify.empty()) return report(verify_proj_certificate(read_json_file(job.verify), f, g, arc));
  return cert_result(classify_H_pair(f, g, arc, job.depth));
}

// perturb

template <PerturbSpace S>
Result perturb_in(const S& space, const json& in, const Job& job, bool replay) {
  auto f = space.element_from_json(in.at("f"));
  auto g = space.element_from_json(in.at("g"));
  if (replay) return report(replay_perturbation(space, f, g, read_json_file(job.verify)));
  Word w = Word::parse(in.at("word").get<std::string>());
  auto y = space.point_from_json(in.at("base"));
  try {
    auto run = break_relation_at_point(space, f, g, w, y, job.max_steps);
    return {run_to_json(space, w, run), run.success ? kExitOk : kExitInconclusive};
  } catch (const DegenerateGeometry& e) {
    return {{{"success", false}, {"reason", std::string("degenerate geometry: ") + e.what()}}, kExitVerifyFailed};
  }
}

Result perturb_dispatch(const Job& job, bool replay) {
  need_inputs(job, 1);
  if (replay && job.verify.empty()) throw ParseError("perturb replay needs --verify LOG");
  json in = input(job, 0);
  std::string space = in.value("space", "pl");
  if (space == "pl") return perturb_in(IntervalSpace{}, in, job, replay);
  if (space == "fibered") return perturb_in(FiberedSpace{}, in, job, replay);
  throw ParseError("unknown space '" + space + "'");
}

Result perturb_run(const Job& job) { return perturb_dispatch(job, false); }
Result perturb_replay(const Job& job) { return perturb_dispatch(job, true); }

struct Leaf {
  const char* group;
  const char* name;
  const char* help;
  Handler run;
};

const std::vector<Leaf>& leaves() {
  static const std::vector<Leaf> all{
      {"pl", "eval", "evaluate a map at points: MAP X...", pl_eval},
      {"pl", "compose", "f o g: F G", pl_compose},
      {"pl", "invert", "inverse map: F", pl_invert},
      {"pl", "support", "support and fixed set: F", pl_support},
      {"pl", "bump", "bump through (a,a) (y,y+t) (b,b): A B Y T", pl_bump},
      {"pl", "random", "seeded random map", pl_random},
      {"pl", "classify", "certify a pair {f,g}", pl_classify},
      {"fibered", "compose", "f o g: F G", fibered_compose},
      {"fibered", "fiber", "restriction to a leaf: F X", fibered_fiber},
      {"fibered", "relation", "find a relation for a pair {f,g}", fibered_relation},
      {"pa", "compose", "f o g: F G", pa_compose},
      {"pa", "derivative-pair", "maps with prescribed derivative: {alpha,beta,p,r}", pa_derivative_pair},
      {"pa", "freecheck", "compare derivatives with matrix words", pa_freecheck},
      {"matrix", "relations", "shortest relation of {A,B}", matrix_relations},
      {"matrix", "pingpong", "ping-pong certificate for {A,B,arcs}", matrix_pingpong},
      {"proj", "compose", "f o g: F G", proj_compose},
      {"proj", "fixedpoints", "fixed points per piece: F", proj_fixedpoints},
      {"proj", "classify-h", "certify a pair {f,g,arc}", proj_classify_h},
      {"perturb", "run", "break a relation at a point", perturb_run},
      {"perturb", "replay", "re-check a perturbation log", perturb_replay},
  };
  return all;
}

void write_output(const Job& job, const std::string& text, std::ostream& out) {
  if (job.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(job.output, std::ios::binary);
  if (!f) throw ParseError("cannot write " + job.output);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with piecewise linear and projective homeomorphisms", "plg"};
  app.require_subcommand(1);
  Job job;
  const Handler* chosen = nullptr;
  std::map<std::string, CLI::App*> groups;
  for (const auto& leaf : leaves()) {
    auto& grp = groups[leaf.group];
    if (!grp) {
      grp = app.add_subcommand(leaf.group, std::string(leaf.group) + " commands");
      grp->require_subcommand(1);
    }
    CLI::App* sub = grp->add_subcommand(leaf.name, leaf.help);
    sub->add_option("inputs", job.inputs, "input files or values");
    sub->add_option("--depth", job.depth, "word depth budget")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-len", job.max_len, "word length budget")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-steps", job.max_steps, "perturbation step budget")->check(CLI::PositiveNumber);
    sub->add_option("--breaks", job.breaks, "breakpoints of a random map")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", job.seed, "random seed");
    sub->add_option("--jobs", job.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--verify", job.verify, "replay this certificate or log");
    sub->add_option("--output", job.output, "write the result here");
    const Leaf* lp = &leaf;
    sub->callback([&job, &chosen, lp] {
      job.command = std::string(lp->group) + " " + lp->name;
      chosen = &lp->run;
    });
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  if (!chosen) {
    err << "no command given\n";
    return kExitBadInput;
  }
  try {
    Result r = (*chosen)(job);
    write_output(job, dump_canonical(r.body), out);
    return r.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}

}  // namespace plg
