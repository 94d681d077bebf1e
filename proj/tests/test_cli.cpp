// test_cli.cpp — drives the radheat binary end to end: exit codes, JSON
// shapes, CSV side outputs, config/flag precedence and byte determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("RADHEAT_CLI_PATH");
  if (!p) throw std::runtime_error("RADHEAT_CLI_PATH not set (run through ctest)");
  return p;
}

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      "\"" + cli_path() + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name) : path("/tmp/radheat_cli_" + name) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("classify emits a verdict and exits zero when decisive") {
  const RunResult inc = run_cli("classify --family tree --k poly:2");
  REQUIRE(inc.code == 0);
  const Json j = Json::parse(inc.out);
  CHECK(j.at("command") == "classify");
  CHECK(j.at("family").at("type") == "tree");
  CHECK(j.at("verdict").at("status") == "incomplete");
  CHECK(j.at("verdict").at("test") == "tree-degree-series");
  CHECK(j.at("verdict").at("exact") == true);

  const RunResult comp = run_cli("classify --family antitree --S poly:2");
  REQUIRE(comp.code == 0);
  CHECK(Json::parse(comp.out).at("verdict").at("status") == "complete");
}

TEST_CASE("solve reports the harmonic growth data") {
  const RunResult r = run_cli("solve --family tree --k const:2 --lambda 1 --depth 200");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const Json& s = j.at("solution");
  CHECK(s.at("lambda") == 1.0);
  CHECK(s.at("depth") == 200);
  CHECK(s.at("w").at(0) == 1.0);
  CHECK(s.at("w").at(1) == 1.5);
  CHECK(s.at("w").at(2) == 2.5);
  CHECK(s.at("boundedness").at("result") == "unbounded");
  CHECK(s.at("divergedAt").is_null());
  CHECK(s.at("increment").size() == 200);
}

TEST_CASE("mass at a fixed radius reports the chosen solver") {
  const RunResult r =
      run_cli("mass --family tree --k poly:2 --atR 32 --times 0.5,1 --solver auto");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("atR") == 32);
  CHECK(j.at("solver") == "uniformization");
  REQUIRE(j.at("mass").size() == 2);
  const double m05 = j.at("mass").at(0).get<double>();
  const double m1 = j.at("mass").at(1).get<double>();
  CHECK(m05 > m1);  // mass leaks over time
  CHECK(m1 > 0.0);
  CHECK(m05 < 1.0);
}

TEST_CASE("mass doubling writes the csv and its diagnostics") {
  const TempPath csv("mass.csv");
  const RunResult r = run_cli("mass --family tree --k const:2 --times 0.5 --rStart 16 --out " +
                              csv.path);
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("curve").at("converged") == true);
  CHECK(j.at("curve").at("limitEstimate").at(0).get<double>() > 0.999);
  const std::string body = slurp(csv.path);
  CHECK(body.rfind("# radheat mass-curve csv v1\nR,t,mass\n16,", 0) == 0);
  CHECK(body.find("# diagnostics: {") != std::string::npos);
}

TEST_CASE("simulate is byte-deterministic and traces on request") {
  const std::string args =
      "simulate --family antitree --S poly:3 --paths 300 --rSim 40 --horizon 0.5 --seed 11";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);  // byte identical
  const Json j = Json::parse(a.out);
  const Json& s = j.at("survival");
  CHECK(s.at("paths") == 300);
  CHECK(s.at("survivors").get<long>() + s.at("escapes").get<long>() == 300);
  CHECK(s.at("seedBase") == 11);
  CHECK(s.at("rSim") == 40);

  const RunResult no_out = run_cli(args + " --trace", /*merge_stderr=*/true);
  CHECK(no_out.code == 1);
  CHECK(no_out.out.find("--out") != std::string::npos);

  const TempPath csv("trace.csv");
  const RunResult traced = run_cli(args + " --trace --out " + csv.path);
  REQUIRE(traced.code == 0);
  const std::string body = slurp(csv.path);
  CHECK(body.rfind("# radheat path-trace csv v1\npath,jump,clock,r,pendant\n", 0) == 0);
  CHECK(body.find("\n0,1,") != std::string::npos);  // path 0, first jump
  const RunResult again = run_cli(args + " --trace --out " + csv.path);
  REQUIRE(again.code == 0);
  CHECK(slurp(csv.path) == body);  // the csv is deterministic too
}

TEST_CASE("compare passes on trees and rejects other families") {
  const RunResult r = run_cli("compare --family tree --k const:2 --compareRadius 3 --compareT 1");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("comparison").at("pass") == true);
  CHECK(j.at("comparison").at("crossDifference").get<double>() < 1e-9);

  const RunResult bad = run_cli("compare --family antitree --S poly:2", /*merge_stderr=*/true);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("tree") != std::string::npos);
}

TEST_CASE("catalog runs builtin entries and external files") {
  const RunResult r = run_cli("catalog");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("allPass") == true);
  CHECK(j.at("total") == 10);
  CHECK(j.at("passed") == 10);
  for (const auto& row : j.at("rows")) CHECK(row.at("pass") == true);

  // a wrong expectation flips the exit code but still reports every row
  const TempPath cat("cat.json");
  {
    std::ofstream f(cat.path);
    f << R"([{"name":"wrong","family":{"type":"tree","k":"poly:2"},"expected":"complete"}])";
  }
  const RunResult bad = run_cli("catalog --catalogFile " + cat.path);
  CHECK(bad.code == 1);
  const Json jb = Json::parse(bad.out);
  CHECK(jb.at("allPass") == false);
  CHECK(jb.at("rows").at(0).at("got").at("status") == "incomplete");
}

TEST_CASE("flags override the config file") {
  const TempPath cfg("cfg.json");
  {
    std::ofstream f(cfg.path);
    f << R"({"family":{"type":"tree","k":"const:2"},"lambda":2.0,"depth":30})";
  }
  const RunResult plain = run_cli("solve --config " + cfg.path);
  REQUIRE(plain.code == 0);
  CHECK(Json::parse(plain.out).at("solution").at("lambda") == 2.0);
  CHECK(Json::parse(plain.out).at("solution").at("depth") == 30);

  const RunResult overridden = run_cli("solve --config " + cfg.path + " --lambda 0.5");
  REQUIRE(overridden.code == 0);
  CHECK(Json::parse(overridden.out).at("solution").at("lambda") == 0.5);
  CHECK(Json::parse(overridden.out).at("solution").at("depth") == 30);
}

TEST_CASE("errors exit nonzero with a readable message") {
  CHECK(run_cli("classify", true).code == 1);                              // no family
  CHECK(run_cli("classify --family moebius --k const:2", true).code == 1); // unknown family
  CHECK(run_cli("mass --family tree --k const:2 --times nope", true).code == 1);
  CHECK(run_cli("mass --family tree --k const:2 --solver euler", true).code == 1);
  CHECK(run_cli("solve --family decorated-tree --k poly:2", true).code == 1);  // missing kTilde
  CHECK(run_cli("", true).code != 0);                                      // subcommand required
  CHECK(run_cli("--bogus", true).code != 0);

  const RunResult msg = run_cli("classify --family moebius --k const:2", true);
  CHECK(msg.out.find("moebius") != std::string::npos);
}
