#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cobord/cli.hpp"
#include "cobord/genera.hpp"

using namespace cobord;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_functional") {
  const FunctionalExpr p3 = parse_functional("p3", 12);
  CHECK(resolve(p3, 3) == Functional::pontryagin(Partition({3})));

  const Functional sign = genus_as_functional([](const ManifoldModel& m) { return signature(m); }, 12);
  const Functional expected = sign - Functional::pontryagin(Partition({2, 1})) * 45;
  CHECK(resolve(parse_functional("sign - 45*p1*p2", 12), 3) == expected);
  CHECK(resolve(parse_functional("  sign-45 * p2 *p1 ", 12), 3) == expected);
  CHECK(resolve(parse_functional("-1/2*p1^2*p2 + p4", 16), 4) ==
        Functional::pontryagin(Partition({4})) - Functional::pontryagin(Partition({2, 1, 1})) * Rational(1, 2));
  CHECK(resolve(parse_functional("ell[0]", 12), 3) ==
        genus_as_functional([](const ManifoldModel& m) { return ahat(m); }, 12));
  CHECK(parse_functional("ell[5] + ahat_t", 16).max_elliptic_index() == 5);
}

TEST_CASE("parse_functional errors") {
  try {
    parse_functional("p1^2", 12);
    FAIL("expected a weight error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("p1^2 has weight 2, dim 12 needs 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_functional("q3", 12), ParseError);
  CHECK_THROWS_AS(parse_functional("p3 +", 12), ParseError);
  CHECK_THROWS_AS(parse_functional("p3 p3", 12), ParseError);
  CHECK_THROWS_AS(parse_functional("sign*p3", 12), ParseError);
  CHECK_THROWS_AS(parse_functional("1/0*p3", 12), ParseError);
  CHECK_THROWS_AS(parse_functional("p3", 10), ParseError);
  try {
    parse_functional("p3 + foo", 12);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("parse_manifold") {
  CHECK(parse_manifold("cp:2").model.real_dimension() == 4);
  CHECK(parse_manifold("hp:3").model.real_dimension() == 12);
  CHECK(parse_manifold("pb:3:[1,0,0,0]").model.real_dimension() == 12);
  CHECK(parse_manifold("prod(cp:2, prod(hp:2, cp:4))").model.real_dimension() == 20);
  CHECK(parse_manifold("X12xHP:2:c=2").model.real_dimension() == 20);
  CHECK(parse_manifold("X12:c=2").warnings.empty());
  CHECK(parse_manifold("X12:c=3").warnings.size() == 1);
  CHECK(parse_manifold("Z20:c=1").warnings.size() == 1);
  CHECK(parse_manifold("Y16:c=1").warnings.empty());
  CHECK(pontryagin_numbers(parse_manifold("X12:c=2").model) == pontryagin_numbers(build_x12(2)));
  CHECK_THROWS_AS(parse_manifold("cp:0"), ParseError);
  CHECK_THROWS_AS(parse_manifold("cp:2 x"), ParseError);
  CHECK_THROWS_AS(parse_manifold("pb:1:[]"), ParseError);
  CHECK_THROWS_AS(parse_manifold("sphere"), ParseError);
}

TEST_CASE("golden outputs") {
  CHECK(run({"verdict", "--dim", "12", "-f", "p3"}).out ==
        "unbounded\nwitness: X12 (c -> 2c (X12_{2c}, spin))\npolynomial: -8*c^3\n");
  CHECK(run({"elliptic", "--manifold", "X12:c=2", "--q-order", "3"}).out == "[0, 0, 0, 0]\n");
  CHECK(run({"member", "--dim", "16", "-f", "p1^4"}).out == "not-in-span\n");
  CHECK(run({"member", "--dim", "12", "--f", "sign + 3*ahat"}).out == "in-span\n");
  CHECK(run({"--json", "pontryagin", "--manifold", "X12:c=1", "--quiet"}).out ==
        "{\"dimension\":12,\"manifold\":\"X12[c=1]\",\"numbers\":{\"p1*p2\":\"-6\",\"p1^3\":\"-8\",\"p3\":\"-1\"}}\n");
  CHECK(run({"pontryagin", "--manifold", "cp:4", "--csv"}).out == "p1^2,p2\n25,10\n");
  CHECK(run({"genus", "--manifold", "cp:2", "--which", "ahat"}).out == "-1/8\n");
  CHECK(run({"spin", "--manifold", "X12:c=3", "--quiet"}).out == "false\n");
  CHECK(run({"elliptic", "--manifold", "hp:2", "--csv"}).out == "q^0,q^1,q^2\n0,1,0\n");
  CHECK(run({"distinct", "--family", "X12", "--range", "1..2"}).out == "true\nc = 1 vs c = 2: p3\n");
  CHECK(run({"scan", "--family", "Y16", "-f", "p4", "--range", "1..2", "--csv"}).out == "c,value\n1,288\n2,2304\n");
}

TEST_CASE("warnings and quiet mode") {
  const Run loud = run({"spin", "--manifold", "X12:c=3"});
  CHECK(loud.err.find("warning") != std::string::npos);
  CHECK(run({"spin", "--manifold", "X12:c=3", "--quiet"}).err.empty());
}

TEST_CASE("json output is canonical and deterministic") {
  const std::vector<std::string> args{"verdict", "--dim", "20", "-f", "p5 - 2*p1*p4", "--json"};
  const Run first = run(args);
  const Run second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.back() == '\n');
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j.dump() + "\n" == first.out);
  CHECK(j["verdict"] == "unbounded");
  CHECK(j["evaluations"].size() == 2);
}

TEST_CASE("span output round-trips through the parser") {
  const Run r = run({"--json", "span", "--dim", "16"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 3);
  const auto span = elliptic_span(16, 4).functionals;
  REQUIRE(j["functionals"].size() == span.size());
  for (std::size_t i = 0; i < span.size(); ++i)
    CHECK(resolve(parse_functional(j["functionals"][i].get<std::string>(), 16), 4) == span[i]);
}

TEST_CASE("commands agree with the library") {
  const Run r = run({"--json", "genus", "--manifold", "prod(hp:2,cp:2)", "--which", "sign"});
  CHECK(nlohmann::json::parse(r.out)["value"] == to_string(signature(product(build_hp(2), build_cp(2)))));
  const Run e = run({"--json", "elliptic", "--manifold", "Y16:c=1"});
  const auto coeffs = elliptic_q_coefficients(build_y16(1), 4);
  auto j = nlohmann::json::parse(e.out);
  REQUIRE(j["coefficients"].size() == coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) CHECK(j["coefficients"][i] == to_string(coeffs[i]));
}

TEST_CASE("exit codes") {
  CHECK(run({"member", "--dim", "12", "-f", "p1^2"}).code == 2);
  CHECK(run({"pontryagin", "--manifold", "nonsense"}).code == 2);
  CHECK(run({"span", "--dim", "10"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"scan", "--family", "X12", "-f", "p3", "--range", "3..1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"genus", "--manifold", "cp:2", "--which", "todd"}).code == 2);
}
