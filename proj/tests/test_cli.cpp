#include <doctest.h>

#include "commands.hpp"
#include "scenario.hpp"

using namespace gsp4::cli;

namespace {

const std::string kMinimal = R"({
  "characters": [{"name": "mu", "order": 0}, {"name": "chi", "equals": "mu^2"}],
  "cuspidals": [
    {"id": "pi", "N": 2, "central": "chi", "chi": "chi", "sign": -1},
    {"id": "eta", "N": 1, "central": "mu", "chi": "chi", "sign": 1}
  ],
  "parameters": [{"id": "sk", "chi": "chi", "root_number": -1,
                  "summands": [{"cuspidal": "pi", "d": 1}, {"cuspidal": "eta", "d": 2}]}],
  "local_data": [{"id": "triv", "parameter": "sk", "places": [{"place": "v", "signs": {}}]}],
  "requests": [{"op": "multiplicity", "parameter": "sk", "local": "triv"}]
})";

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("Saito-Kurokawa with root number -1 and trivial local data has multiplicity 0") {
  Report r = run_scenario(parse_scenario(kMinimal), 1);
  REQUIRE(r.lines.size() == 1);
  CHECK(contains(r.lines[0], "(d)"));
  CHECK(contains(r.lines[0], "-> 0"));
  CHECK_FALSE(r.failed);
}

TEST_CASE("empty request list gives an empty report") {
  Report r = run_scenario(parse_scenario(R"({"requests": []})"), 1);
  CHECK(r.lines.empty());
  CHECK_FALSE(r.failed);
}

TEST_CASE("verify-endoscopy request passes") {
  Report r = run_scenario(parse_scenario(R"({"requests": [{"op": "verify-endoscopy"}]})"), 3);
  CHECK_FALSE(r.failed);
  CHECK(r.lines.size() == 7);
}

TEST_CASE("input errors") {
  try {
    parse_scenario("{\n  \"characters\": [\n");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(contains(e.what(), "byte"));
  }
  CHECK_THROWS_AS(parse_scenario(R"({"cuspidals": [{"id": "pi", "N": 2, "central": "chi", "chi": "chi", "sign": -1}]})"),
                  InputError);
  CHECK_THROWS_AS(run_scenario(parse_scenario(R"({"requests": [{"op": "classify", "parameter": "nope"}]})"), 1),
                  InputError);
  CHECK_THROWS_AS(run_scenario(parse_scenario(R"({"requests": [{"op": "bogus"}]})"), 1), InputError);
  // omega^2 != chi^N
  CHECK_THROWS_AS(parse_scenario(R"({"characters": [{"name": "mu", "order": 0}],
    "cuspidals": [{"id": "pi", "N": 2, "central": "mu", "chi": "1", "sign": -1}]})"),
                  InputError);
}

TEST_CASE("character expressions and matrices") {
  gsp4::CharacterGroup cg;
  cg.declare_basis("mu", 0);
  cg.declare_class("a");
  CHECK(parse_character(cg, "mu^2*a") == cg.mul(cg.pow(cg.get("mu"), 2), cg.get("a")));
  CHECK(cg.is_trivial(parse_character(cg, "1")));
  CHECK(cg.is_trivial(parse_character(cg, "a*a")));
  CHECK_THROWS_AS(parse_character(cg, "nu"), InputError);
  auto m = parse_matrix(nlohmann::json::parse(R"([["1/2", 0], [3, "-4/6"]])"));
  CHECK(m == gsp4::Matrix{{gsp4::Rational(1, 2), 0}, {3, gsp4::Rational(-2, 3)}});
  CHECK(matrix_json(m).dump() == R"([["1/2","0"],["3","-2/3"]])");
  CHECK_THROWS_AS(parse_matrix(nlohmann::json::parse(R"([[1, 2], [3]])")), InputError);
}

TEST_CASE("example scenario runs clean") {
  Report r = run_scenario(load_scenario(GSP4_SCENARIO_DIR "/example.json"), 1);
  CHECK_FALSE(r.failed);
  CHECK(contains(r.text(), "multiplicity sk on GSpin5 [Saito-Kurokawa (d)]: places 0 product ++ eps -- m_psi 1 -> 0"));
  // reports are a function of (scenario, seed)
  CHECK(run_scenario(load_scenario(GSP4_SCENARIO_DIR "/example.json"), 1).text() == r.text());
}

TEST_CASE("factor-involution command") {
  Report r = factor_involution(nlohmann::json::parse(R"({"gram": [[0, 1], [1, 0]], "g": [[3, 0], [0, 2]]})"));
  CHECK_FALSE(r.failed);
  CHECK(r.lines.front() == "nu 6");
  CHECK_THROWS_AS(factor_involution(nlohmann::json::parse(R"({"gram": [[1, 0], [0, 1]], "g": [[2, 0], [0, 1]]})")),
                  InputError);
}

TEST_CASE("selftest") {
  SelftestOptions opts;
  opts.involution_samples = 5;
  Report a = selftest(opts);
  CHECK_FALSE(a.failed);
  CHECK(selftest(opts).text() == a.text());

  SUBCASE("seed variation keeps the verdicts") {
    SelftestOptions other = opts;
    other.seed = 99;
    Report b = selftest(other);
    REQUIRE(b.records.size() == a.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].at("check") == b.records[i].at("check"));
      CHECK(a.records[i].at("pass") == b.records[i].at("pass"));
    }
  }
  SUBCASE("corrupted catalog matrix fails by name") {
    SelftestOptions bad = opts;
    bad.corrupt_catalog = true;
    Report b = selftest(bad);
    CHECK(b.failed);
    CHECK(contains(b.text(), "FAIL endoscopy.centralizer Gamma~/GSpin4^alpha"));
  }
}
