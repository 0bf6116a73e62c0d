#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lcmquad/cli.hpp"
#include "lcmquad/serialize.hpp"

using namespace lcmquad;
using namespace lcmquad::cli;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output run_config(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig make(Command cmd, const char* poly) {
  RunConfig c;
  c.command = cmd;
  c.poly = parse_poly(poly);
  return c;
}

}  // namespace

TEST_CASE("constant emits JSON that round-trips") {
  const auto r = run_config(make(Command::constant, "1,0,1"));
  REQUIRE(r.code == 0);
  const auto parsed = breakdown_from_json(r.out);
  const auto direct = B_f(QuadPoly(1, 0, 1));
  CHECK(parsed.B == direct.B);
  CHECK(parsed.C0 == direct.C0);
  CHECK(parsed.Cd == direct.Cd);
  CHECK(parsed.Cf == direct.Cf);
  CHECK(parsed.d == direct.d);
  CHECK(parsed.q == direct.q);
  REQUIRE(parsed.terms.size() == direct.terms.size());
  for (std::size_t i = 0; i < parsed.terms.size(); ++i) {
    CHECK(parsed.terms[i].series == direct.terms[i].series);
    CHECK(parsed.terms[i].index == direct.terms[i].index);
    CHECK(parsed.terms[i].value == direct.terms[i].value);
    CHECK(parsed.terms[i].tail_bound == direct.terms[i].tail_bound);
  }
  CHECK(std::fabs(parsed.B - -0.0662756342) < 1e-10);
}

TEST_CASE("constant text prints 15 significant digits") {
  auto c = make(Command::constant, "1,0,1");
  c.format = Format::text;
  const auto r = run_config(c);
  CHECK(r.out.find("B_f -0.0662756342130646") != std::string::npos);
}

TEST_CASE("table rows") {
  auto c = make(Command::table, "1,0,1");
  c.ns = {100, 1000, 10000};
  const auto r = run_config(c);
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,log_lcm,E_f");
  std::getline(in, line);
  const auto comma = line.rfind(',');
  CHECK(line.substr(0, 4) == "100,");
  CHECK(std::fabs(std::stod(line.substr(comma + 1)) - -18) <= 1);
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("lcm exact") {
  auto c = make(Command::lcm, "1,0,1");
  c.ns = {3};
  c.exact = true;
  const auto r = run_config(c);
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
}

TEST_CASE("lcm oracle check and exponent CSV") {
  auto c = make(Command::lcm, "2,1,-2");
  c.ns = {500};
  c.oracle_check = true;
  auto r = run_config(c);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["oracle_check"] == "pass");
  CHECK(j["n"] == 500);
  c.oracle_check = false;
  c.format = Format::csv;
  c.ns = {3};
  c.poly = QuadPoly(1, 0, 1);
  r = run_config(c);
  CHECK(r.out == "p,beta\n2,1\n5,1\n");
}

TEST_CASE("output independent of workers") {
  auto c = make(Command::table, "2,-1,2");
  c.ns = {1000, 50000};
  const auto one = run_config(c);
  c.workers = 4;
  CHECK(run_config(c).out == one.out);
  c.workers = 8;
  CHECK(run_config(c).out == one.out);
}

TEST_CASE("roots and discrepancy") {
  auto c = make(Command::roots, "1,0,1");
  c.x = 10;
  auto r = run_config(c);
  CHECK(r.out == "p,nu,frac\n2,1,0.5\n5,2,0.4\n5,3,0.6\n");
  c.command = Command::discrepancy;
  c.x = 1000;
  c.ns = {1000};
  r = run_config(c);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["star_discrepancy"].get<double>() > 0.0);
  CHECK(j["t_sums"][0]["T1"].get<double>() == 0.0);
}

TEST_CASE("reducible command") {
  auto c = make(Command::reducible, "1,3,2");
  c.ns = {4};
  const auto r = run_config(c);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["log_lcm"].get<double>() == doctest::Approx(std::log(60.0)));
  CHECK(j["constant"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("domain errors exit 2") {
  CHECK(run_config(make(Command::constant, "1,0,-1")).code == 2);
  auto c = make(Command::reducible, "1,0,1");
  c.ns = {10};
  CHECK(run_config(c).code == 2);
}

TEST_CASE("usage errors exit 1 and name the flag") {
  RunConfig c;
  c.command = Command::constant;
  auto r = run_config(c);
  CHECK(r.code == 1);
  CHECK(r.err.find("--poly") != std::string::npos);

  c = make(Command::table, "1,0,1");
  r = run_config(c);
  CHECK(r.code == 1);
  CHECK(r.err.find("--n") != std::string::npos);

  c = make(Command::roots, "1,0,1");
  r = run_config(c);
  CHECK(r.code == 1);
  CHECK(r.err.find("--x") != std::string::npos);

  c = make(Command::lcm, "1,0,1");
  c.ns = {3};
  c.workers = 0;
  r = run_config(c);
  CHECK(r.code == 1);
  CHECK(r.err.find("--workers") != std::string::npos);

  CHECK_THROWS_AS(parse_n_list("10,x"), UsageError);
  CHECK_THROWS_AS(parse_progression("1"), UsageError);
  CHECK(parse_n_list("100,1000") == std::vector<u64>{100, 1000});
  CHECK_FALSE(parse_format("xml").has_value());
}
