#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fatres/cli.hpp"
#include "fatres/field.hpp"

using namespace fatres;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& verb, const std::string& path, bool json = false,
        bool verify = false) {
  CliOptions opts;
  opts.verb = verb;
  opts.input_path = path;
  opts.json = json;
  opts.verify = verify;
  std::ostringstream out, err;
  int code = run_command(opts, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& text) {
  std::string path = "cli_tmp_scheme.json";
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("resolve on the double point fixture") {
  Run r = run("resolve", fixture("p2_point_m2.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("2:   3  .") != std::string::npos);
  CHECK(r.out.find("3:   .  2") != std::string::npos);
  CHECK(r.out.find("poincare: 3*T^2 + 2*X*T^3") != std::string::npos);
  CHECK(r.out.find("minimal: yes") != std::string::npos);
}

TEST_CASE("resolve json output round trips byte for byte") {
  Run r = run("resolve", fixture("p2_collinear_22.json"), true);
  CHECK(r.code == 0);
  auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.dump(2) + "\n" == r.out);
  CHECK(parsed["poincare_constructed"] == "T^2 + T^3 + T^4 + X*T^4 + X*T^5");
  CHECK(parsed["minimal"] == true);
  CHECK(parsed["criterion_flags"].size() == 2);
}

TEST_CASE("resolve the empty scheme") {
  Run r = run("resolve", fixture("p2_empty.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("poincare: 1\n") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
  Run missing = run("resolve", fixture("no_such_file.json"));
  CHECK(missing.code == 2);

  std::string off = write_temp(
      "{\"ambient_dim\": 2, \"field\": \"q\", \"points\": ["
      "{\"coords\": [\"1\", \"0\", \"1\"], \"mult\": 2}]}");
  Run bad = run("resolve", off);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("point 0") != std::string::npos);  // names the offender

  std::string malformed = write_temp("{\"ambient_dim\": }");
  CHECK(run("resolve", malformed).code == 2);
  std::remove("cli_tmp_scheme.json");
}

TEST_CASE("oracle agrees with resolve on fixtures") {
  for (const char* name : {"p2_point_m2.json", "p2_collinear_22.json", "p3_point_m1.json",
                           "p3_vertex_211_gf2.json"}) {
    Run a = run("resolve", fixture(name), true);
    Run b = run("oracle", fixture(name), true);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    auto ja = nlohmann::ordered_json::parse(a.out);
    auto jb = nlohmann::ordered_json::parse(b.out);
    CHECK(ja["betti"] == jb["betti"]);
  }
}

TEST_CASE("oracle on the single point in P3") {
  Run r = run("oracle", fixture("p3_point_m1.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("poincare: 3*T + 3*X*T^2 + X^2*T^3") != std::string::npos);
}

TEST_CASE("oracle on the collinear pair of double points") {
  Run r = run("oracle", fixture("p2_collinear_22.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("poincare: T^2 + T^3 + T^4 + X*T^4 + X*T^5") != std::string::npos);
}

TEST_CASE("formula equals the constructed poincare when the criterion holds") {
  for (const char* name : {"p2_point_m3.json", "p2_collinear_21.json", "p3_vertex_221.json"}) {
    Run f = run("formula", fixture(name), true);
    Run r = run("resolve", fixture(name), true);
    REQUIRE(f.code == 0);
    auto jf = nlohmann::ordered_json::parse(f.out);
    auto jr = nlohmann::ordered_json::parse(r.out);
    CHECK(jf["criterion_holds"] == true);
    CHECK(jf["poincare"] == jr["poincare_constructed"]);
  }
}

TEST_CASE("criterion witnesses") {
  Run q = run("criterion", fixture("p3_general_221.json"), true);
  REQUIRE(q.code == 0);
  auto jq = nlohmann::ordered_json::parse(q.out);
  CHECK(jq["all_hold"] == true);
  for (const auto& lv : jq["levels"]) {
    CHECK(lv["holds"] == true);
    std::string w = lv["witness"];
    CHECK((w == "euler" || w == "linear-algebra"));
  }

  // level 2 generators have even degree, so characteristic 2 blocks the
  // Euler route and the monomial divisibility test decides
  Run g2 = run("criterion", fixture("p3_vertex_211_gf2.json"), true);
  auto jg = nlohmann::ordered_json::parse(g2.out);
  CHECK(jg["all_hold"] == true);
  bool saw_monomial = false;
  for (const auto& lv : jg["levels"]) saw_monomial = saw_monomial || lv["witness"] == "monomial-direct";
  CHECK(saw_monomial);

  Run ds = run("criterion", fixture("p3_degshift_gf3.json"), true);
  auto jd = nlohmann::ordered_json::parse(ds.out);
  CHECK(jd["all_hold"] == true);
  bool saw_shift = false;
  for (const auto& lv : jd["levels"]) saw_shift = saw_shift || lv["witness"] == "degree-shift";
  CHECK(saw_shift);
}

TEST_CASE("verify command reports the bound") {
  Run r = run("verify", fixture("p2_point_m2.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("complex: ok") != std::string::npos);
  CHECK(r.out.find("exact up to degree") != std::string::npos);

  CliOptions opts;
  opts.verb = "verify";
  opts.input_path = fixture("p2_point_m2.json");
  opts.bound = 5;
  std::ostringstream out, err;
  CHECK(run_command(opts, out, err) == 0);
  CHECK(out.str().find("exact up to degree 5: ok") != std::string::npos);
}

TEST_CASE("unknown verb is rejected") {
  CliOptions opts;
  opts.verb = "frobnicate";
  opts.input_path = "x";
  std::ostringstream out, err;
  CHECK(run_command(opts, out, err) == 2);
}

TEST_CASE("minimize flag attaches the minimized table") {
  CliOptions opts;
  opts.verb = "resolve";
  opts.input_path = fixture("p2_point_m2.json");
  opts.minimize = true;
  opts.json = true;
  std::ostringstream out, err;
  REQUIRE(run_command(opts, out, err) == 0);
  auto j = nlohmann::ordered_json::parse(out.str());
  REQUIRE(j.contains("betti_minimized"));
  CHECK(j["betti_minimized"] == j["betti"]);  // already minimal here
}

TEST_CASE("field override flag") {
  CliOptions opts;
  opts.verb = "resolve";
  opts.input_path = fixture("p2_point_m2.json");
  opts.field = "gf:5";
  opts.json = true;
  std::ostringstream out, err;
  REQUIRE(run_command(opts, out, err) == 0);
  auto j = nlohmann::ordered_json::parse(out.str());
  CHECK(j["poincare_constructed"] == "3*T^2 + 2*X*T^3");
}

TEST_CASE("installed binary end to end") {
  std::string cmd = std::string(CLI_BIN) + " resolve --json " + fixture("p3_point_m1.json") +
                    " > cli_e2e_out.json 2> cli_e2e_err.txt";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  CHECK(WEXITSTATUS(rc) == 0);
  std::ifstream in("cli_e2e_out.json");
  std::stringstream buf;
  buf << in.rdbuf();
  auto j = nlohmann::ordered_json::parse(buf.str());
  CHECK(j["poincare_constructed"] == "3*T + 3*X*T^2 + X^2*T^3");

  std::string bad = std::string(CLI_BIN) + " resolve " + fixture("no_such.json") +
                    " > /dev/null 2>&1";
  int rc2 = std::system(bad.c_str());
  CHECK(WEXITSTATUS(rc2) == 2);
  std::remove("cli_e2e_out.json");
  std::remove("cli_e2e_err.txt");
}
