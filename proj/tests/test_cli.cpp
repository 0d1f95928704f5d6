#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "kirwanlab/error.hpp"
#include "kirwanlab/io.hpp"
#include "paper_check.hpp"

using namespace kirwanlab;
namespace fs = std::filesystem;
using io::json;

namespace {

const std::string data_dir = KIRWANLAB_TEST_DATA;
const std::string cube = data_dir + "/cp1_cubed.json";
const std::string cp2 = data_dir + "/cp2.json";
const std::string cp1 = data_dir + "/cp1.json";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("kirwanlab_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const fs::path p = path / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == sep)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

}  // namespace

TEST_CASE("integrate") {
  const auto ok = run({"integrate", "--spec", cube, "--alpha", "x2^2", "--c", "9/2"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["value"] == "2");

  const auto critical = run({"integrate", "--spec", cube, "--alpha", "x2^2", "--c", "3"});
  CHECK(critical.code == 1);
  CHECK(json::parse(critical.err)["error"] == "CriticalLevel");

  const auto degree = run({"integrate", "--spec", cube, "--alpha", "x2", "--c", "9/2"});
  CHECK(degree.code == 1);
  CHECK(json::parse(degree.err)["error"] == "WrongDegree");

  const auto parse = run({"integrate", "--spec", cube, "--alpha", "x2^", "--c", "9/2"});
  CHECK(json::parse(parse.err)["error"] == "ParseError");
}

TEST_CASE("spec errors surface as error objects") {
  TempDir tmp;
  const auto dup = tmp.file("dup.json", R"({"factors":[{"n":1,"weights":[1,1]}]})");
  const auto r = run({"ring", "--spec", dup});
  CHECK(r.code == 1);
  const auto e = json::parse(r.err);
  CHECK(e["error"] == "ValidationError");
  CHECK(e["message"].get<std::string>().find("factor 0") != std::string::npos);

  const auto bad = tmp.file("bad.json", "{\"factors\": [\n}");
  const auto p = run({"fixed-points", "--spec", bad});
  CHECK(json::parse(p.err)["error"] == "ParseError");
  CHECK(json::parse(p.err)["message"].get<std::string>().find("line 2") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"integrate", "--spec", cube}).code == 2);
  CHECK(run({"ring", "--spec", cube, "--unknown"}).code == 2);
  CHECK(run({"tables", "--spec", cube, "--format", "xml"}).code == 2);
  const auto u = run({"ring"});
  CHECK(u.code == 2);
  CHECK(json::parse(u.err)["error"] == "UsageError");
}

TEST_CASE("tables are exact and round-trip") {
  const auto r = run({"tables", "--spec", cube, "--basis", "4=t^2,x0^2,x0*x1,x0*x2,x1^2,x1*x2,x2^2", "--table",
                      "t2"});
  REQUIRE(r.code == 0);
  auto lines = split(r.out, '\n');
  CHECK(lines[0] == "chamber,c,t^2,x0^2,x0*x1,x0*x2,x1^2,x1*x2,x2^2");
  CHECK(lines[5] == "5,9/2,1/8,0,-1/4,0,0,0,2");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = split(lines[i], ',');
    for (std::size_t k = 1; k < cells.size(); ++k) CHECK(to_string(parse_rational(cells[k])) == cells[k]);
  }

  const auto both = run({"tables", "--spec", cp2});
  CHECK(both.code == 0);
  CHECK(both.out.find("point,mu,t,x") != std::string::npos);
  CHECK(both.out.find("chamber,c,t,x") != std::string::npos);

  const auto pretty = run({"tables", "--spec", cp2, "--format", "pretty", "--decimal", "4"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("0.3333") != std::string::npos);

  const auto bad_basis = run({"tables", "--spec", cp2, "--basis", "2=t,t"});
  CHECK(bad_basis.code == 1);
  CHECK(json::parse(bad_basis.err)["error"] == "CustomBasisNotABasis");
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bdc", "--spec", cube},
           {"tables", "--spec", cube, "--format", "pretty"},
           {"pairing", "--spec", cube, "--q", "2"},
           {"fixed-points", "--spec", cube}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  setenv("KIRWANLAB_THREADS", "1", 1);
  const auto serial = run({"bdc", "--spec", cube});
  setenv("KIRWANLAB_THREADS", "4", 1);
  const auto parallel = run({"bdc", "--spec", cube});
  unsetenv("KIRWANLAB_THREADS");
  CHECK(serial.out == parallel.out);
}

TEST_CASE("bdc, verify and rinv") {
  TempDir tmp;
  const auto cls = tmp.file("class.json");
  const auto r = run({"bdc", "--spec", cp2, "--out", cls});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["dimension"] == 0);
  CHECK(j["class"] == "-3*1⊗t + 3*1⊗x - 3*t⊗1 + 3*x⊗1");

  const auto v = run({"verify", "--spec", cp2, "--class", cls});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["is_bdc"] == true);

  const auto zero = tmp.file("zero.json", R"({"bases":{},"blocks":{"0":[["0","0"]],"2":[["0"],["0"]]}})");
  const auto vz = run({"verify", "--spec", cp2, "--class", zero});
  CHECK(vz.code == 1);
  CHECK(json::parse(vz.out)["is_bdc"] == false);

  const auto mismatch = run({"verify", "--spec", cp1, "--class", cls});
  CHECK(mismatch.code == 1);
  CHECK(json::parse(mismatch.err)["error"] == "BasisMismatch");

  const auto ri = run({"rinv", "--spec", cp2, "--class", cls, "--alpha", "1", "--chamber", "1"});
  CHECK(ri.code == 0);
  CHECK(json::parse(ri.out)["result"] == "1");
  CHECK(run({"rinv", "--spec", cp2, "--class", cls, "--alpha", "t^3", "--chamber", "1"}).code == 1);

  const auto sub = run({"bdc", "--spec", cube, "--chamber", "1,2"});
  CHECK(sub.code == 0);
  CHECK(json::parse(sub.out)["chambers"] == json::array({1, 2}));
}

TEST_CASE("pairing") {
  const auto r = run({"pairing", "--spec", cp2, "--q", "0", "--chamber", "2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j[0]["matrix"] == json::parse(R"([["1/6","1/2"]])"));
  CHECK(run({"pairing", "--spec", cp2, "--q", "1"}).code == 1);
  CHECK(run({"pairing", "--spec", cp2, "--q", "0", "--chamber", "9"}).code == 1);
}

TEST_CASE("diagonal-cp1 and compose") {
  const auto d = run({"diagonal-cp1"});
  REQUIRE(d.code == 0);
  const auto j = json::parse(d.out);
  CHECK(j["diagonal"] == "(t1 + t2)*1⊗1 - u⊗1 - 1⊗u");
  CHECK(j["shriek"]["u"] == "t1*t2*1⊗1 - u⊗u");
  CHECK(json::parse(run({"diagonal-cp1", "--truncate", "0"}).out)["diagonal"] == "-u⊗1 - 1⊗u");

  TempDir tmp;
  const auto one = tmp.file("one.json", R"({"expression":"1"})");
  const auto zero = tmp.file("zero.json", R"({"expression":"0"})");
  const auto out1 = tmp.file("o1.json"), outu = tmp.file("ou.json");
  const auto c = run({"compose", "--spec-m", cp1, "--spec-n", cp1, "--lm1", one, "--lmu", zero, "--ln1", one, "--lnu",
                      zero, "--out-one", out1, "--out-u", outu});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["lambda_one"] == "t1 + t2");
  CHECK(json::parse(c.out)["lambda_u"] == "t1*t2");
  CHECK(io::read_json(out1)["expression"] == "t1 + t2");

  const auto bad = run({"compose", "--spec-m", cp1, "--spec-n", cp1, "--lm1", zero, "--lmu", one, "--ln1", one,
                        "--lnu", zero, "--out-one", out1, "--out-u", outu});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.err)["error"] == "WrongDegree");
}

TEST_CASE("traintrack verify") {
  const auto y = run({"traintrack", "verify", "--track", data_dir + "/y_track.json"});
  CHECK(y.code == 0);
  CHECK(json::parse(y.out)["balanced"] == true);

  TempDir tmp;
  const auto bad = tmp.file("bad.json", R"({"vertices":["boundary","boundary","branch","boundary"],
    "branches":[{"tail":0,"head":2,"weight":"1/2"},{"tail":1,"head":2,"weight":"1/2"},{"tail":2,"head":3,"weight":"2"}]})");
  const auto b = run({"traintrack", "verify", "--track", bad});
  CHECK(b.code == 1);
  CHECK(json::parse(b.out)["weighting"] == false);

  const auto partial = tmp.file("partial.json", R"({"vertices":["boundary","boundary"],"branches":[{"tail":0,"head":1}]})");
  const auto p = run({"traintrack", "verify", "--track", partial});
  CHECK(p.code == 1);
  CHECK(json::parse(p.err)["error"] == "MissingBranch");
}

TEST_CASE("paper-check") {
  const auto r = run({"paper-check"});
  // The published B^4 vector does not satisfy its own defining equations.
  CHECK(r.code == 1);
  std::size_t passes = 0, fails = 0;
  for (const auto& line : split(r.out, '\n')) {
    if (line.rfind("PASS", 0) == 0) ++passes;
    if (line.rfind("FAIL", 0) == 0) {
      ++fails;
      CHECK(line.find("B^4 = -[8 8 4 2 4 2 1]") != std::string::npos);
      CHECK(line.find("(-8, 8, -4, -2, 2, -1, 1/2)") != std::string::npos);
    }
  }
  CHECK(fails == 1);
  CHECK(passes == cli::run_paper_check().size() - 1);
}
