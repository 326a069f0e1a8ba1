#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pcmeff/cli.hpp"
#include "pcmeff/service.hpp"

using namespace pcmeff;

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

std::string data(const std::string& name) { return std::string(PCMEFF_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("efficiency of matrix A") {
  const auto eig = run({"efficiency", data("exampleA.csv"), "--method=eigenvector"});
  CHECK(eig.code == 2);
  CHECK(eig.out == "INEFFICIENT, lp_optimum=-0.226029, dominator=[0.436173, 0.436173, 0.110295, 0.049014]\n");

  const auto gm = run({"efficiency", data("exampleA.csv"), "--method=geometric_mean"});
  CHECK(gm.code == 0);
  CHECK(gm.out == "EFFICIENT\n");

  const auto wide = run({"efficiency", data("exampleA.csv"), "--precision", "9"});
  CHECK(wide.out.find("0.436172898") != std::string::npos);
}

TEST_CASE("custom weights and weak efficiency") {
  const auto prime = run({"efficiency", data("exampleA.csv"), "--weights", data("exampleA_wprime.csv")});
  CHECK(prime.code == 0);
  const auto weak = run({"weak-efficiency", data("example3.csv"), "--weights", data("example3_weights.json")});
  CHECK(weak.code == 2);
  CHECK(weak.out.rfind("STRONGLY_INEFFICIENT", 0) == 0);
  CHECK(run({"weak-efficiency", data("exampleA.csv")}).out == "WEAKLY_EFFICIENT\n");
}

TEST_CASE("weights and dominate") {
  const auto w = run({"weights", data("ones3.csv")});
  CHECK(w.code == 0);
  CHECK(w.out == "weights=[0.333333, 0.333333, 0.333333], lambda_max=3.000000\n");
  const auto d = run({"dominate", data("exampleA.csv")});
  CHECK(d.code == 2);
  CHECK(d.out.rfind("dominator=[0.436173, 0.436173, 0.110295, 0.049014]\n", 0) == 0);
}

TEST_CASE("json output is the service report") {
  const auto cli = run({"efficiency", data("exampleA.json"), "--json"});
  CHECK(cli.code == 2);
  std::ifstream f(data("exampleA.json"));
  std::stringstream buffer;
  buffer << f.rdbuf();
  const nlohmann::json body = {{"matrix", nlohmann::json::parse(buffer.str())}, {"method", "eigenvector"}};
  CHECK(cli.out == handle_request("POST", "/api/v1/analyze", body.dump()).body);
}

TEST_CASE("experiment") {
  const std::string csv = "cli_experiment_trials.csv";
  const auto e = run({"experiment", "--n", "4", "--mode", "saaty_discrete", "--trials", "20", "--seed", "5", "--csv", csv});
  CHECK(e.code == 0);
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(doc["trials"] == 20);
  std::ifstream f(csv);
  std::string line;
  int lines = 0;
  while (std::getline(f, line)) ++lines;
  CHECK(lines == 21);
  std::remove(csv.c_str());
}

TEST_CASE("errors exit with 1") {
  CHECK(run({"efficiency", "missing.csv"}).code == 1);
  CHECK(run({"efficiency", data("exampleA.csv"), "--method=power"}).code == 1);
  CHECK(run({"efficiency", data("exampleA.csv"), "--method=eigenvector", "--weights", data("ones3.csv")}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  const auto bad = run({"efficiency", data("bad_row.csv")});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
}
