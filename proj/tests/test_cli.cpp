#include <doctest.h>

#include "qshuffle/cli.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/io.hpp"
#include "support.hpp"

#include <sstream>

using namespace testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    v.push_back(line);
  return v;
}

} // namespace

TEST_CASE("roots") {
  auto r = run({"roots", "G2"});
  CHECK(r.code == exit_ok);
  auto l = lines(r.out);
  REQUIRE(l.size() == 6);
  CHECK(l[0] == "1  1,0  w[1]");
  CHECK(l[3] == "4  3,2  w[1,1,2,1,2]");
  CHECK(l[5] == "6  0,1  w[2]");
  CHECK(lines(run({"roots", "A2"}).out).size() == 3);
  CHECK(lines(run({"roots", "B3"}).out).size() == 9);

  auto relabelled = lines(run({"roots", "G2", "--order", "2,1"}).out);
  REQUIRE(relabelled.size() == 6);
  CHECK(relabelled[0] == "1  0,1  w[2]");
  CHECK(relabelled[5] == "6  1,0  w[1]");
}

TEST_CASE("good words") {
  auto r = run({"good-words", "G2", "--weight", "3,2"});
  CHECK(r.code == exit_ok);
  auto l = lines(r.out);
  REQUIRE(l.size() == 7);
  CHECK(l[0].rfind("w[1,1,2,1,2]", 0) == 0);
  CHECK(l[6] == "w[2,2,1,1,1]  = w[2]^2 w[1]^3");
}

TEST_CASE("dual canonical vectors") {
  auto r = run({"dual-canonical", "A2", "--weight", "1,1"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "b*_w[1,2]  (kappa = 1)\n  1 · w[1,2]\n\nb*_w[2,1]  (kappa = 1)\n  1 · w[2,1]\n");
  auto b2 = run({"dual-canonical", "B2", "--weight", "2,1"}).out;
  CHECK(b2.find("(q + q^-1) · w[1,1,2]") != std::string::npos);
  CHECK(b2.find("(q + q^-1) · w[2,1,1]") != std::string::npos);
  auto one = run({"dual-canonical", "G2", "--word", "w[2,1,2,1,1]"});
  CHECK(one.code == exit_ok);
  CHECK(lines(one.out).size() == 4);
}

TEST_CASE("expansion on the dual PBW basis") {
  auto r = run({"expand", "G2", "--word", "1,2,1,2,1"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "b*_w[1,2,1,2,1] =\n"
                 "  1 · E*_w[1,2,1,2,1]\n"
                 "  (-q^3 - q) · E*_w[1,2,1,1,2]\n"
                 "  q^2 · E*_w[1,1,2,1,2]\n");
}

TEST_CASE("scans") {
  auto r = run({"scan", "A2", "--max-height", "4", "--check", "reality"});
  CHECK(r.code == exit_ok);
  CHECK(lines(r.out).back() == "total: weights=14 vectors=21 violations=0");
  auto j = json::parse(run({"scan", "A3", "--max-height", "4", "--check", "positivity", "--format", "json"}).out);
  CHECK(j["total_violations"] == 0);
  CHECK(j["command"] == "scan");
  CHECK(j["weights"].size() == weights_up_to_height(3, 4).size());
  auto inv = run({"scan", "G2", "--max-height", "4", "--check", "invariants"});
  CHECK(lines(inv.out).back().find("violations=0") != std::string::npos);
  auto timed = run({"scan", "A1", "--max-height", "2", "--check", "positivity", "--timing"});
  CHECK(lines(timed.out).back().find("seconds=") != std::string::npos);
}

TEST_CASE("characters") {
  auto r = run({"character", "A3", "--skew", "2,1/0", "--shift", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("character: w[2,3,1] + w[2,1,3]") != std::string::npos);
  CHECK(lines(r.out).back() == "MATCH");
  CHECK(run({"character", "B2", "--shifted", "2,1"}).out.find("character: w[1,2,1]\nMATCH") != std::string::npos);
  CHECK(run({"character", "B3", "--shifted", "2,1"}).code == exit_ok);
  CHECK(run({"character", "A3", "--skew", "2,1+2"}).code == exit_ok);
  auto j = json::parse(run({"character", "B3", "--shifted", "3,1/1", "--format", "json"}).out);
  CHECK(j["match"] == true);
  CHECK(j["kind"] == "shifted");
}

TEST_CASE("reality") {
  auto r = run({"is-real", "A2", "--word", "1,2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "b*_w[1,2]  real  (b* * b* = q^-1 b*_w[1,2,1,2])\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"roots"}).code == exit_usage);
  CHECK(run({"roots", "X3"}).code == exit_usage);
  CHECK(run({"roots", "E9"}).code == exit_usage);
  CHECK(run({"roots", "A2", "--order", "1,1"}).code == exit_usage);
  CHECK(run({"roots", "A2", "--format", "xml"}).code == exit_usage);
  CHECK(run({"good-words", "A2", "--weight", "1"}).code == exit_usage);
  CHECK(run({"dual-canonical", "A2"}).code == exit_usage);
  CHECK(run({"dual-canonical", "A2", "--word", "2,2,1,1,3"}).code == exit_usage);
  CHECK(run({"dual-canonical", "G2", "--word", "1,2,2"}).code == exit_usage);
  CHECK(run({"scan", "A2", "--max-height", "2", "--check", "nothing"}).code == exit_usage);
  auto shape = run({"character", "A3", "--skew", "2,1/0", "--shift", "1"});
  CHECK(shape.code == exit_usage);
  CHECK(shape.err.find("shift must lie in") != std::string::npos);
  CHECK(run({"character", "A3", "--shifted", "2,1"}).code == exit_usage);
  CHECK(run({"character", "B3", "--shifted", "2,1", "--shift", "1"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("identical runs give identical bytes") {
  const std::vector<std::vector<std::string>> commands{
      {"dual-canonical", "B3", "--weight", "2,1,1", "--format", "json"},
      {"scan", "B2", "--max-height", "4", "--check", "invariants"},
      {"roots", "E6"},
      {"dual-pbw", "C3", "--weight", "1,2,1"},
  };
  for (const auto &c : commands)
    CHECK(run(c).out == run(c).out);
}

TEST_CASE("JSON round trip") {
  for (const char *name : {"B3", "G2"}) {
    const std::string weight = std::string(name) == "G2" ? "3,2" : "2,2,1";
    auto j = json::parse(run({"dual-canonical", name, "--weight", weight, "--format", "json"}).out);
    CHECK(j["datum"] == name);
    auto d = datum(name);
    DualBasis basis(d);
    auto expect = basis.dual_canonical_weight(d->parse_weight(weight));
    REQUIRE(j["elements"].size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
      const auto &e = j["elements"][k];
      CHECK(elt_from_json(e["element"], d) == expect[k].elt);
      CHECK(word_from_json(e["good_word"], *d) == expect[k].g.word);
      CHECK(laurent_from_json(e["kappa"]) == expect[k].kappa);
      CHECK(json::parse(to_json(expect[k].elt).dump()) == e["element"]);
    }
  }
  // relabelled output uses original node numbers
  auto j = json::parse(run({"dual-canonical", "G2", "--order", "2,1", "--weight", "1,1", "--format", "json"}).out);
  CHECK(j["order"] == json::array({2, 1}));
  CHECK(j["elements"][0]["good_word"] == json::array({2, 1}));
}

TEST_CASE("large coefficients survive JSON") {
  LaurentPoly p = LaurentPoly::from_terms({{3, Integer("123456789012345678901234567890")}, {-1, Integer(-7)}});
  json j = to_json(p);
  CHECK(j["3"].is_string());
  CHECK(j["-1"] == -7);
  CHECK(laurent_from_json(j) == p);
  CHECK_THROWS_AS(laurent_from_json(json::array()), qshuffle::parse_error);
  CHECK_THROWS_AS(laurent_from_json(json{{"x", 1}}), qshuffle::parse_error);
}
