#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "plg/cli.hpp"

using nlohmann::json;

namespace {

const std::string data = PLG_TEST_DATA;

struct Out {
  int code;
  std::string text;
  json body() const { return json::parse(text); }
};

Out run(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args) {
    if (a.ends_with(".json") && a.find('/') == std::string::npos) a = data + "/" + a;
  }
  int code = plg::run_cli(args, out, err);
  return {code, out.str()};
}

std::string temp_path(const std::string& name) { return "./plg_cli_test_" + name; }

}  // namespace

TEST_CASE("pl commands") {
  auto id = run({"pl", "compose", "pl_f.json", "pl_finv.json"});
  CHECK(id.code == 0);
  CHECK(id.body()["breakpoints"] == json::parse(R"([["0","0"],["1","1"]])"));
  auto inv = run({"pl", "invert", "pl_f.json"});
  CHECK(inv.body() == json::parse(std::ifstream(data + "/pl_finv.json")));
  auto ev = run({"pl", "eval", "pl_f.json", "1/2", "3/4"});
  CHECK(ev.body()["values"] == json::parse(R"(["1/4","5/8"])"));
  CHECK(run({"pl", "support", "pl_f.json"}).body()["support"] == json::parse(R"([["0","1"]])"));
  CHECK(run({"pl", "bump", "0", "1", "1/2", "1/4"}).code == 0);
  CHECK(run({"pl", "bump", "0", "1", "1/2", "1"}).code == 2);
  auto r1 = run({"pl", "random", "--seed", "7"}), r2 = run({"pl", "random", "--seed", "7"});
  CHECK(r1.text == r2.text);
}

TEST_CASE("classification exit codes and replay") {
  auto c = run({"pl", "classify", "--depth", "8", "pl_pair.json"});
  CHECK(c.code == 0);
  CHECK(c.body()["kind"] == "ZkWitnessCert");
  CHECK(run({"pl", "classify", "--depth", "0", "pl_pair.json"}).code == 3);
  std::string cert = temp_path("zk.json");
  CHECK(run({"pl", "classify", "pl_pair.json", "--output", cert}).code == 0);
  auto v = run({"pl", "classify", "pl_pair.json", "--verify", cert});
  CHECK(v.code == 0);
  CHECK(v.body()["ok"] == true);
  std::remove(cert.c_str());
}

TEST_CASE("matrix commands") {
  auto rel = run({"matrix", "relations", "--max-len", "12", "sl2gens.json"});
  CHECK(rel.code == 0);
  CHECK(rel.body()["kind"] == "RelationCert");
  CHECK(rel.body()["payload"]["word"] == "aaBaaB");
  auto lin = run({"matrix", "relations", "--max-len", "12", "sl2gens_linear.json"});
  CHECK(lin.body()["payload"]["word"] == "abAbaB");
  CHECK(run({"matrix", "relations", "--max-len", "8", "sanov.json"}).code == 3);
  auto pp = run({"matrix", "pingpong", "pingpong.json"});
  CHECK(pp.code == 0);
  CHECK(pp.body()["kind"] == "FreeCert");
  CHECK(run({"matrix", "pingpong", "pingpong_bad.json"}).code == 1);
}

TEST_CASE("fibered, pa and projective commands") {
  auto fr = run({"fibered", "relation", "--max-len", "8", "fibered_pair.json"});
  CHECK(fr.code == 0);
  CHECK(fr.body()["kind"] == "RelationCert");
  CHECK(run({"fibered", "fiber", "fibered_f.json", "1/3"}).body() == json::parse(std::ifstream(data + "/pl_f.json")));
  CHECK(run({"fibered", "compose", "fibered_f.json", "fibered_f.json"}).code == 0);
  auto dp = run({"pa", "derivative-pair", "pa_sanov.json"});
  REQUIRE(dp.code == 0);
  std::string pair = temp_path("pa_pair.json");
  std::ofstream(pair) << dp.text;
  auto fc = run({"pa", "freecheck", "--max-len", "2", pair});
  CHECK(fc.code == 0);
  CHECK(fc.body()["words_checked"] == 16);
  std::remove(pair.c_str());
  auto fp = run({"proj", "fixedpoints", "proj_f.json"});
  CHECK(fp.code == 0);
  CHECK(run({"proj", "fixedpoints", "proj_g.json"}).body()["points"][0]["point"] == "1/8");
  CHECK(run({"proj", "compose", "proj_f.json", "proj_g.json"}).code == 0);
  auto h = run({"proj", "classify-h", "--depth", "12", "proj_hpair.json"});
  CHECK(h.code == 0);
  CHECK(h.body()["kind"] == "ZkWitnessCert");
}

TEST_CASE("perturbation run and replay") {
  for (std::string in : {"perturb_pl.json", "perturb_fibered.json"}) {
    std::string log = temp_path("perturb.json");
    auto r = run({"perturb", "run", in, "--output", log});
    CHECK(r.code == 0);
    auto v = run({"perturb", "replay", in, "--verify", log});
    CHECK(v.code == 0);
    std::remove(log.c_str());
  }
  CHECK(run({"perturb", "replay", "perturb_pl.json"}).code == 2);
}

TEST_CASE("input errors") {
  CHECK(run({"pl", "compose", "missing.json", "pl_f.json"}).code == 2);
  CHECK(run({"pl", "compose", "pl_f.json"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"pl", "classify", "--depth", "-1", "pl_pair.json"}).code == 2);
  CHECK(run({"proj", "classify-h", "pl_pair.json"}).code == 2);
}
