#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "closedbetti/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = closedbetti::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

void check_round_trip(const std::string& text) {
  const auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump() + "\n" == text);
}

}  // namespace

TEST_CASE("check prints closedness and the mu vector") {
  const auto r = run({"check", "--edges", "1-2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "closed=true"));
  CHECK(contains(r.out, "mu=(0,0)"));

  const auto star = run({"check", "--edges", "1-2,1-3,1-4"});
  CHECK(star.code == 0);
  CHECK(contains(star.out, "closed=false"));
}

TEST_CASE("betti prints the diagram with the corner entry") {
  const auto r = run({"betti", "--mu", "3,1,0,0,0,0", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "total: 1 11 36 59 53 26 7 1"));
  CHECK(contains(r.out, "    3: .  .  .  3 10 12 6 1"));
  CHECK(contains(r.out, "extremal: beta(7,10)=1"));
  CHECK(contains(r.out, "pd = 7"));
  CHECK(contains(r.out, "reg = 3"));
}

TEST_CASE("alg32 on the worked example") {
  const auto r = run({"alg32", "--lambda", "6,5,4,4,2,1", "--mu", "4,2,1,1,0,0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "U = (6,6),(4,5),(2,2)\n"));
  CHECK(contains(r.out, "S = {1}\n"));
  CHECK(contains(r.out, "E(2,2) = {x1,y1} {x1,y2} {x2,y2}\n"));
}

TEST_CASE("json output follows the schema and round-trips") {
  const auto r = run({"betti", "--mu", "3,1,0,0,0,0", "--format", "json"});
  REQUIRE(r.code == 0);
  check_round_trip(r.out);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"mu", "betti", "pd", "reg", "extremal", "unique_extremal", "alg32"});
  CHECK(j["pd"] == 7);
  CHECK(j["reg"] == 3);
  CHECK(j["extremal"] == nlohmann::ordered_json::parse("[[7,10,1]]"));
  CHECK(j["unique_extremal"] == true);
  CHECK(j["alg32"]["U"] == nlohmann::ordered_json::parse("[[5,5],[2,4],[1,1]]"));

  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "--edges", "1-2,2-3", "--format", "json"},
           {"initial", "--mu", "1,0,0,0", "--format", "json"},
           {"alg32", "--lambda", "6,5,4,4,2,1", "--mu", "4,2,1,1,0,0", "--format", "json"},
           {"verify", "--edges", "1-2,2-3,3-4", "--format", "json"},
           {"enumerate", "--n", "5", "--format", "json"},
           {"enumerate", "--n", "4", "--glued", "--format", "json"},
           {"scan", "--n-max", "4", "--format", "json"}}) {
    const auto out = run(args);
    CHECK(out.code == 0);
    check_round_trip(out.out);
  }
}

TEST_CASE("verify reports every check and exits 0 when all pass") {
  const auto r = run({"verify", "--mu", "3,1,0,0,0,0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "result: PASS"));
  CHECK_FALSE(contains(r.out, "FAIL "));
  CHECK(contains(r.out, "transferred by Hilbert-function argument"));
}

TEST_CASE("input errors exit 2 with a position") {
  auto r = run({"check", "--edges", "1-2,2-x"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--edges:1:7:"));

  r = run({"betti", "--mu", "3,1,,0"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--mu:1:5:"));

  r = run({"check", "--input", "-"}, "n 4\nedges 1-2, 2-3\nedges 3-4, 4-4\n");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "<stdin>:3:12:"));

  r = run({"check", "--input", "-"}, "# comment\nwidth 3\n");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "<stdin>:2:1: unknown key"));

  r = run({"check", "--edges", "1-2", "--mu", "0,0"});
  CHECK(r.code == 2);

  r = run({"check"});
  CHECK(r.code == 2);

  r = run({"betti", "--edges", "1-3,2-4,1-4"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "not_closed"));

  r = run({"betti", "--mu", "3,1,0,0,0,0", "--field", "4"});
  CHECK(r.code == 2);

  r = run({"betti", "--mu", "3,1,0,0,0,0", "--budget", "6"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "budget_exceeded"));

  r = run({"alg32", "--lambda", "2,2", "--mu", "1,0"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "not_adjacent"));

  r = run({"frobnicate"});
  CHECK(r.code == 2);
}

TEST_CASE("graphs can be read from a file or stdin") {
  const auto r = run({"check", "--input", "-"}, "# a four-vertex block\nedges 1-2,1-3,2-3\nedges 2-4,3-4\n");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "mu=(1,0,0,0)"));

  const std::string path = "closedbetti_cli_input.txt";
  {
    std::ofstream file(path);
    file << "lambda 6,5,4,4,2,1\nmu 4,2,1,1,0,0\n";
  }
  const auto f = run({"alg32", "--input", path});
  std::remove(path.c_str());
  CHECK(f.code == 0);
  CHECK(contains(f.out, "U = (6,6),(4,5),(2,2)"));

  CHECK(run({"alg32", "--input", "no/such/file"}).code == 2);
}

TEST_CASE("the field comes from the flag, else the environment, else GF(2)") {
  CHECK(contains(run({"betti", "--edges", "1-2"}).out, "over GF(2)"));
  CHECK(contains(run({"betti", "--edges", "1-2", "--field", "0"}).out, "over QQ"));
  setenv("CLOSEDBETTI_FIELD", "3", 1);
  CHECK(contains(run({"betti", "--edges", "1-2"}).out, "over GF(3)"));
  CHECK(contains(run({"betti", "--edges", "1-2", "--field", "2"}).out, "over GF(2)"));
  unsetenv("CLOSEDBETTI_FIELD");
}

TEST_CASE("enumerate and scan") {
  const auto e = run({"enumerate", "--n", "5"});
  CHECK(e.code == 0);
  CHECK(contains(e.out, "(2,1,0,0,0)\ncount: 5\n"));
  CHECK(run({"enumerate"}).code == 2);

  const auto s = run({"scan", "--n-max", "5"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "with more than one extremal: 0"));
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "betti"));
}
