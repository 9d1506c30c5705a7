#include "discnorm/cli.hpp"

#include "discnorm/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using disc::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = disc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "discnorm_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

Json json(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("norm command", "[cli]") {
  const auto alt = write_temp("alt.csv", "x\n-1\n1\n-1\n1\n");
  auto r = run({"norm", alt, "--kind", "d"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "{\"value\":1}\n");
  CHECK(json(run({"norm", alt, "--kind", "naive"}))["value"] == 1);
  CHECK(json(run({"norm", alt, "--kind", "a"}))["value"] == 1);
  CHECK(json(run({"norm", alt, "--kind", "tv"}))["value"] == 6);
  CHECK(json(run({"norm", alt, "--kind", "sup"}))["value"] == 1);
  CHECK(json(run({"norm", alt, "--kind", "p", "--p", "1"}))["value"] == 4);
  CHECK(json(run({"norm", alt, "--kind", "p", "--p", "inf"}))["value"] == 1);
  CHECK(run({"norm", alt, "--format", "csv"}).out == "value\n1\n");

  const auto empty = write_temp("empty.csv", "");
  r = run({"norm", empty});
  REQUIRE(r.code == 0);
  CHECK(r.out == "{\"value\":0}\n");
}

TEST_CASE("dual command", "[cli]") {
  const auto hat = write_temp("hat.csv", "x\n0\n1\n0\n");
  const auto j = json(run({"dual", hat}));
  CHECK(j["dual_d"] == 1);
  CHECK(j["bv"] == 2);
  CHECK(j["dual_a"] == 2);
  CHECK(j["mu_mon"].get<double>() == 0.5);
  CHECK(json(run({"monotonicity", hat}))["mu_mon"].get<double>() == 0.5);
}

TEST_CASE("sample and decompose commands", "[cli]") {
  const auto ramp = write_temp("ramp.csv", "t,x\n0,0\n1,0.5\n2,1.5\n3,3\n");
  const auto r = run({"sample", ramp, "--theta", "1"});
  REQUIRE(r.code == 0);
  const auto eta = disc::io::events_from_json(json(r));
  CHECK(eta.size() == 3);

  const auto seq = write_temp("pm.csv", "x\n1\n-1\n");
  const auto j = json(run({"decompose", seq, "--mode", "discrete"}));
  CHECK(j["alpha"].get<double>() == 0.5);
  CHECK(j["r"] == 1);
  CHECK(run({"decompose", ramp, "--mode", "continuous"}).code == 0);
  CHECK(run({"decompose", ramp, "--mode", "range", "--format", "csv"}).out.rfind("t,g\n", 0) == 0);
}

TEST_CASE("misalign, heisenberg and quasi commands", "[cli]") {
  const auto x = write_temp("misalign.csv", "x\n1\n0\n1\n");
  const auto m = json(run({"misalign", x, "--k-max", "2"}));
  CHECK(m["k"].size() == 5);
  CHECK(m["p4_ok"] == true);
  CHECK(m["p5_ok"] == true);
  CHECK(m["p6_ok"] == true);

  const auto blocks = write_temp("blocks.csv", "x\n1\n1\n0\n0\n");
  const auto h = json(run({"check-heisenberg", blocks}));
  CHECK(h["holds"] == true);
  CHECK(h["slack"] == 0);

  const auto f = write_temp("f.csv", "t,x\n0,0\n1,1\n2,2\n");
  const auto g = write_temp("g.csv", "t,x\n0,0\n1,0\n2,0\n");
  const auto q = json(run({"quasi", f, g, "--theta", "0.5"}));
  CHECK(q["lower_ok"] == true);
  CHECK(q["upper_ok"] == true);
  CHECK(q["B"] == 2);
}

TEST_CASE("exit codes and error reports", "[cli]") {
  const auto bad = write_temp("bad.csv", "x\n1\nabc\n");
  auto r = run({"norm", bad});
  CHECK(r.code == 2);
  const auto e = Json::parse(r.err);
  CHECK(e["error"]["code"] == "parse_error");
  CHECK(e["error"]["message"].get<std::string>().find("line 3") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(run({"norm", "/nonexistent/file.csv"}).code == 2);
  CHECK(run({"norm"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);

  const auto flat = write_temp("flat.csv", "x\n3\n3\n");
  r = run({"monotonicity", flat});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err)["error"]["code"] == "domain_error");

  const auto two = write_temp("two.csv", "x\n1\n2\n");
  CHECK(run({"check-heisenberg", two}).code == 1);
  CHECK(run({"norm", two, "--kind", "p", "--p", "0.5"}).code == 1);
  CHECK(run({"sample", two, "--theta", "0"}).code == 2);

  r = run({"norm", bad, "--format", "csv"});
  CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("output file and determinism", "[cli]") {
  const auto x = write_temp("det.csv", "x\n0.3\n-1.7\n2.2\n0.1\n");
  const auto first = run({"misalign", x});
  for (int i = 0; i < 5; ++i) CHECK(run({"misalign", x}).out == first.out);

  const auto out = (fs::temp_directory_path() / "discnorm_cli_test" / "out.json").string();
  REQUIRE(run({"misalign", x, "-o", out}).code == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == first.out);
}

TEST_CASE("tolerance from the environment", "[cli]") {
  // A malformed variable falls back to the default.
  const auto x = write_temp("tol.csv", "x\n1\n0\n1\n");
  ::setenv("DISC_TOL", "1e-3", 1);
  CHECK(run({"misalign", x}).code == 0);
  ::setenv("DISC_TOL", "garbage", 1);
  CHECK(run({"misalign", x}).code == 0);
  ::unsetenv("DISC_TOL");
  CHECK(run({"misalign", x, "--tol", "1e-6"}).code == 0);
  CHECK(run({"misalign", x, "--tol", "-1"}).code == 2);
}
