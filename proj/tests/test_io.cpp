#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "kirwanlab/error.hpp"
#include "kirwanlab/io.hpp"

using namespace kirwanlab;
using testsupport::Rng;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir{KIRWANLAB_TEST_DATA};

std::string error_message(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() + ": " + e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("spec files") {
  CHECK(io::load_spec(data_dir / "cp1_cubed.json") == power_of_two_cp1(3));
  CHECK(io::load_spec(data_dir / "cp2.json") == projective_space({0, 1, 3}));

  const ManifoldSpec spec({{2, {-3, 0, 5}}, {1, {1, 2}}});
  CHECK(io::spec_from_json(io::to_json(spec)) == spec);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(io::spec_from_json(io::parse_json(R"({"factors":[{"n":1,"weights":[2,2]}]})")), ValidationError);
  CHECK_THROWS_AS(io::spec_from_json(io::parse_json(R"({"factors":[{"n":0,"weights":[2]}]})")), ValidationError);
  CHECK_THROWS_AS(io::spec_from_json(io::parse_json(R"({"factors":[{"n":1,"weights":[0.5,2]}]})")), ValidationError);
  CHECK_THROWS_AS(io::spec_from_json(io::parse_json(R"({"factors":[{"weights":[0,1]}]})")), ParseError);
  CHECK_THROWS_AS(io::spec_from_json(io::parse_json(R"({"fact":[]})")), ParseError);
  const auto msg = error_message([] {
    io::spec_from_json(io::parse_json(R"({"factors":[{"n":1,"weights":[0,1]},{"n":1,"weights":[3,3]}]})"));
  });
  CHECK(msg.find("factor 1") != std::string::npos);
}

TEST_CASE("malformed JSON reports a position") {
  const auto msg = error_message([] { io::parse_json("{\n  \"factors\": [\n    {\"n\": 1,,}\n]}"); });
  CHECK(msg.rfind("ParseError", 0) == 0);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
  CHECK_THROWS_AS(io::read_json(data_dir / "does_not_exist.json"), ParseError);
}

TEST_CASE("rationals and polynomials round-trip") {
  Rng rng(81);
  for (int k = 0; k < 100; ++k) {
    const Rational r = rng.rational(1000, 97);
    CHECK(io::rational_from_json(io::to_json(r), "r") == r);
    const Polynomial p = testsupport::random_polynomial(rng, 3, 6, 5);
    CHECK(io::polynomial_from_json(io::to_json(p), 3, "p") == p);
  }
  CHECK(io::rational_from_json(io::json(7), "r") == 7);
  CHECK_THROWS_AS(io::rational_from_json(io::json(0.5), "r"), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(io::json("1/0"), "r"), ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(io::parse_json(R"([{"exponents":[1],"coefficient":"1"}])"), 2, "p"),
                  ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(io::parse_json(R"([{"exponents":[-1, 0],"coefficient":"1"}])"), 2, "p"),
                  ParseError);
}

TEST_CASE("classes round-trip") {
  const ManifoldSpec cube = power_of_two_cp1(3);
  std::vector<Monomial> deg4;
  for (const char* m : {"t^2", "x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"})
    deg4.push_back(parse_monomial(m, cube.variable_names()));
  const BasisSet bases = BasisSet::standard(cube).with(cube, 4, deg4);
  const BdcClass beta = global_bdc(cube, bases).member({Vector{}, Vector{1, Rational(-2, 3)}, Vector{}});
  const BdcClass back = io::class_from_json(io::to_json(beta, cube), cube);
  CHECK(back.bases == beta.bases);
  CHECK(back.blocks == beta.blocks);
}

TEST_CASE("class errors") {
  const ManifoldSpec cp2 = projective_space({0, 1, 3});
  CHECK_THROWS_AS(io::class_from_json(io::parse_json(R"({"bases":{"2":["t","t"]},"blocks":{}})"), cp2),
                  BasisMismatch);
  CHECK_THROWS_AS(io::class_from_json(io::parse_json(R"({"bases":{"two":["t","x"]},"blocks":{}})"), cp2),
                  ParseError);
  CHECK_THROWS_AS(io::class_from_json(io::parse_json(R"({"bases":{},"blocks":{"0":[["1","2"],["3"]]}})"), cp2),
                  ParseError);
  CHECK_THROWS_AS(io::class_from_json(io::parse_json(R"({"blocks":{}})"), cp2), ParseError);
  CHECK_THROWS_AS(io::class_from_json(io::parse_json(R"({"bases":{"2":["y"]},"blocks":{}})"), cp2), ParseError);
}

TEST_CASE("track files") {
  const auto y = io::track_from_json(io::read_json(data_dir / "y_track.json"));
  CHECK(y.track.vertices().size() == 4);
  CHECK(y.weights.size() == 3);
  CHECK(validate_weighting(y.track, y.weights));

  const auto loop = io::track_from_json(io::parse_json(R"({"vertices":[],"branches":[{"loop":true,"weight":"2"}]})"));
  CHECK(std::holds_alternative<ClosedLoop>(loop.track.branches()[0]));
  CHECK_THROWS_AS(io::track_from_json(io::parse_json(R"({"vertices":["corner"],"branches":[]})")), ParseError);
  CHECK_THROWS_AS(io::track_from_json(io::parse_json(R"({"vertices":["boundary","boundary"],"branches":[{"tail":0}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::track_from_json(io::parse_json(R"({"vertices":["boundary"],"branches":[]})")), ValidationError);
}

TEST_CASE("write_json then read_json") {
  const fs::path tmp = fs::temp_directory_path() / "kirwanlab_io_roundtrip.json";
  const auto j = io::to_json(projective_space({4, -1}));
  io::write_json(tmp, j);
  CHECK(io::read_json(tmp) == j);
  fs::remove(tmp);
}
