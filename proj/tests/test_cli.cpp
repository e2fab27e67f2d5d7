#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "conesmooth/cli.hpp"
#include "conesmooth/error.hpp"

using namespace conesmooth;
using namespace conesmooth::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome exec(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

int entry(std::vector<std::string> args) {
  args.insert(args.begin(), "conesmooth");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  return main_entry(static_cast<int>(argv.size()), argv.data());
}

RunConfig relu_eval(double x) {
  RunConfig c;
  c.command = Command::SmoothEval;
  c.family = "relu";
  c.variant = "min-general";
  c.x = {x};
  return c;
}

}  // namespace

TEST_CASE("smooth-eval of the relu") {
  const Outcome o = exec(relu_eval(0.0));
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j["value"].get<double>() == 0.0625);
  CHECK(j["gradient"][0].get<double>() == 0.5);
  CHECK(j["lambda"].get<double>() == 0.0625);
  CHECK(json::parse(exec(relu_eval(-1.0)).out)["value"].get<double>() == -0.0625);
}

TEST_CASE("core of the orthant") {
  RunConfig c;
  c.command = Command::Core;
  c.cone = "orthant";
  c.d = 3;
  const Outcome o = exec(c);
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j["width"].get<double>() == doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-15));
  CHECK(j["center"] == json::array({1.0, 1.0, 1.0}));
  CHECK(j["unique"].get<bool>());
}

TEST_CASE("functional core and hausdorff for a family") {
  RunConfig c;
  c.command = Command::Core;
  c.family = "max";
  c.d = 4;
  const json core = json::parse(exec(c).out);
  CHECK(core["width"].get<double>() == doctest::Approx(0.375));
  c.command = Command::Hausdorff;
  c.variant = "min-general";
  c.n = 400;
  c.seed = 1;
  const Outcome o = exec(c);
  REQUIRE(o.code == 0);
  const json h = json::parse(o.out);
  CHECK(h["distance"].get<double>() == doctest::Approx(0.1875).epsilon(1e-9));
}

TEST_CASE("validation errors exit with 2") {
  RunConfig c = relu_eval(0.0);
  c.variant = "";
  CHECK(exec(c).code == 2);
  c = relu_eval(0.0);
  c.x = {1.0, 2.0};
  CHECK(exec(c).code == 2);
  c = relu_eval(0.0);
  c.beta = -1.0;
  CHECK(exec(c).code == 2);
  c = relu_eval(0.0);
  c.family = "three-norm";
  const Outcome o = exec(c);
  CHECK(o.code == 2);
  CHECK_FALSE(o.err.empty());
  CHECK(entry({"smooth-eval", "--family", "relu"}) == 2);
  CHECK(entry({"no-such-command"}) == 2);
  CHECK(entry({"smooth-eval", "--beta", "abc"}) == 2);
}

TEST_CASE("config round trip") {
  RunConfig c;
  c.command = Command::Bench;
  c.family = "max";
  c.d = 10;
  c.n = 64;
  c.eps = 1e-3;
  c.seed = 42;
  c.x = {0.5, -1.25};
  c.vertices = {{1.0, 0.0}, {0.0, 1.0}};
  c.weights = {1.0, 2.0};
  c.format = Format::Csv;
  c.out = "bench.csv";
  CHECK(config_from_json(to_json(c)) == c);
  CHECK(config_from_json(json::parse(to_json(c).dump())) == c);
  CHECK_THROWS_AS(config_from_json(json{{"command", "core"}, {"colour", "red"}}), InvalidArgument);
  CHECK_THROWS_AS(config_from_json(json{{"command", "paint"}}), InvalidArgument);
}

TEST_CASE("seed precedence") {
  RunConfig c;
  c.seed = 5;
  CHECK(effective_seed(c) == 5);
  c.seed.reset();
  ::setenv("CONESMOOTH_SEED", "99", 1);
  CHECK(effective_seed(c) == 99);
  ::unsetenv("CONESMOOTH_SEED");
  CHECK(effective_seed(c) == 7);
}

TEST_CASE("runs are idempotent") {
  RunConfig c;
  c.command = Command::CoreEstimate;
  c.cone = "soc";
  c.d = 2;
  c.n = 500;
  c.seed = 3;
  const Outcome a = exec(c);
  const Outcome b = exec(c);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  c.command = Command::Figure;
  c.figure = "two-norm";
  c.format = Format::Csv;
  CHECK(exec(c).out == exec(c).out);
}

TEST_CASE("two-norm figure data") {
  RunConfig c;
  c.command = Command::Figure;
  c.figure = "two-norm";
  c.format = Format::Csv;
  const Outcome o = exec(c);
  REQUIRE(o.code == 0);
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,sigma,f1,f2,f3,f4,f5");
  std::size_t rows = 0;
  bool saw_origin = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("0,", 0) == 0) {
      saw_origin = true;
      std::vector<double> v;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
      CHECK(v[2] == 0.0);
      CHECK(v[3] == 0.25);
      CHECK(v[4] == doctest::Approx(2.0 * std::sqrt(2.0) - std::sqrt(8.0)));
      CHECK(v[6] == 0.0);
    }
  }
  CHECK(rows == 601);
  CHECK(saw_origin);
}

TEST_CASE("verify command") {
  RunConfig c;
  c.command = Command::Verify;
  c.suite = "composite";
  c.seed = 7;
  const Outcome o = exec(c);
  CHECK(o.code == 0);
  CHECK(o.out.find("0 failed") != std::string::npos);
}

TEST_CASE("csv output of a json-only command") {
  RunConfig c = relu_eval(0.0);
  c.format = Format::Csv;
  const Outcome o = exec(c);
  REQUIRE(o.code == 0);
  CHECK(o.out.rfind("key,value\n", 0) == 0);
  CHECK(o.out.find("value,0.0625") != std::string::npos);
}
