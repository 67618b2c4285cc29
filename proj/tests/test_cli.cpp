#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "stagedtrees/cli.hpp"
#include "stagedtrees/polynomial.hpp"
#include "support.hpp"

using namespace stagedtrees;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return oracle::fixture_path(name); }

}  // namespace

TEST_CASE("interpolate") {
  const Run a = run({"interpolate", fx("running_example.tree.json")});
  CHECK(a.code == 0);
  CHECK(a.out == parse_polynomial(oracle::read_fixture("running_example.poly")).to_string() + "\n");
  CHECK(run({"interpolate", fx("single_vertex.tree.json")}).out == "1\n");
  const Run chds = run({"interpolate", fx("chds.tree.json")});
  CHECK(parse_polynomial(chds.out) == parse_polynomial(oracle::read_fixture("chds.poly")));
  CHECK(chds.out.find("a4*l4 + a4*l5 + a4*l6") != std::string::npos);
  CHECK(run({"interpolate", "--nested", "x*(y + z) + w"}).out == "w + x*y + x*z\n");
  const Run net = run({"interpolate", fx("running_example.tree.json"), "--network", fx("running_example.weights.json")});
  CHECK(net.code == 0);
  CHECK(net.out.rfind("0.125*phi1*theta1 + ", 0) == 0);
  CHECK(run({"interpolate", "--nested", "x + (y"}).code == 2);
  CHECK(run({"interpolate", "/nonexistent/tree.json"}).code == 2);
}

TEST_CASE("decompose") {
  const Run a = run({"decompose", "-f", fx("running_example.poly")});
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out).size() == 3);
  CHECK(run({"decompose", "x*y"}).out == "[[\"x\"],[\"y\"]]\n");
  CHECK(run({"decompose", "x*x"}).code == 3);
  CHECK(run({"decompose", "x +"}).code == 2);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    const std::string text = oracle::to_text(oracle::random_support(rng, 8, 8, 4));
    CHECK(run({"decompose", text}).out == run({"decompose", "--oracle", text}).out);
  }
}

TEST_CASE("class") {
  CHECK(run({"class", "--count-only", "-f", fx("running_example.poly")}).out == "2\n");
  CHECK(run({"class", "--count-only", "-f", fx("chds.poly")}).out == "4\n");
  CHECK(run({"class", "--count-only", "-f", fx("independence_binary4.poly")}).out == "576\n");
  const Run empty = run({"class", "--count-only", "-f", fx("counterexample.poly")});
  CHECK(empty.code == 0);
  CHECK(empty.out == "0\n");
  CHECK(run({"class", "2*x + y"}).code == 3);
  CHECK(run({"class", "x^2 + y"}).code == 3);
  CHECK(run({"class", "--format", "xml", "x + y"}).code == 2);
  CHECK(run({"class", "-f", "/nonexistent/poly"}).code == 2);

  const Run text = run({"class", "--format", "text", "-f", fx("running_example.poly")});
  CHECK(text.out == "phi1*(theta1 + theta2) + phi2*(theta1 + theta2*(sigma1 + sigma2 + sigma3)) + phi3*(theta1 + theta2)\n"
                    "theta1*(phi1 + phi2 + phi3) + theta2*(phi1 + phi2*(sigma1 + sigma2 + sigma3) + phi3)\n");

  const Run json = run({"class", "-f", fx("running_example.poly")});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["count"] == 2);
  CHECK(doc["trees"].size() == 2);
  CHECK(json.out == run({"class", "--jobs", "3", "-f", fx("running_example.poly")}).out);

  const Run unstaged = run({"class", "--include-unstaged", "--count-only", "-f", fx("three_factor.poly")});
  CHECK(unstaged.out == "staged 2\nunstaged 3\n");

  const auto dir = std::filesystem::temp_directory_path() / "stagedtrees_cli_test";
  std::filesystem::remove_all(dir);
  CHECK(run({"class", "--count-only", "--dot-dir", dir.string(), "-f", fx("running_example.poly")}).code == 0);
  CHECK(std::filesystem::exists(dir / "tree_0000.dot"));
  CHECK(std::filesystem::exists(dir / "tree_0001.dot"));
  CHECK_FALSE(std::filesystem::exists(dir / "tree_0002.dot"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("check, incidence, complex") {
  const Run check = run({"check", "-f", fx("counterexample.poly")});
  CHECK(check.code == 0);
  CHECK(nlohmann::json::parse(check.out)["passes"] == true);
  CHECK(run({"check", "x + x*y"}).code == 0);

  const Run csv = run({"incidence", "--var-order", "theta1,theta2,phi1,phi2,phi3,sigma1,sigma2,sigma3", "-f",
                       fx("running_example.poly")});
  CHECK(csv.out == oracle::read_fixture("running_example.incidence.csv"));
  CHECK(run({"incidence", "--var-order", "zz", "x + y"}).code == 3);

  const Run cx = run({"complex", "-f", fx("running_example.poly")});
  const auto doc = nlohmann::json::parse(cx.out);
  CHECK(doc["saturated"] == false);
  CHECK(doc["components"].size() == 1);
  CHECK(doc["facets"].size() == 8);
  CHECK(run({"complex", "--format", "dot", "x*y + z"}).out.rfind("graph", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"class", "x + y", "-f", fx("chds.poly")}).code == 2);
}
