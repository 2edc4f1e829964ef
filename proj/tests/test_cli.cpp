#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "blendstat/testing.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(BLENDSTAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/blendstat_test_") + name;
}

}  // namespace

TEST_CASE("point subcommand") {
  SUBCASE("pi0 = 0 reports the p-value") {
    const auto r = run("point --p 0.05 --pi0-lower 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("blended 0.05\n") != std::string::npos);
    CHECK(r.output.find("regime frequentist_dominated") != std::string::npos);
  }
  SUBCASE("pi0 = 1 is the prior-known regime") {
    const auto r = run("point --p 0.05 --pi0-lower 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("blended 1\n") != std::string::npos);
    CHECK(r.output.find("regime prior_known") != std::string::npos);
  }
  SUBCASE("intermediate value, 10 significant digits") {
    const auto r = run("point --p 0.05 --pi0-lower 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("blended 0.2893498855\n") != std::string::npos);
  }
  SUBCASE("json output") {
    const auto r = run("point --p 0.05 --pi0-lower 0.5 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["blended"].get<double>() == doctest::Approx(0.2893498855));
    CHECK(doc["regime"] == "bayes_dominated");
  }
  SUBCASE("domain error exits with status 2") {
    CHECK(run("point --p 0 --pi0-lower 0.5").exit_code == 2);
    CHECK(run("point --p 1.5 --pi0-lower 0.5").exit_code == 2);
    const auto r = run("point --p 0.05 --pi0-lower 2");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("pi0_lower") != std::string::npos);
  }
}

TEST_CASE("table subcommand") {
  const std::string out1 = tmp_path("table1.csv");
  const std::string out2 = tmp_path("table2.csv");

  SUBCASE("default grid dimensions and header") {
    const auto r = run("table --out " + out1);
    CHECK(r.exit_code == 0);
    std::ifstream in(out1);
    std::string line;
    std::getline(in, line);
    CHECK(line == "p,pi0_lower,sellke,lfdr_lower,blended,maxent");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 4221);
  }
  SUBCASE("byte-identical across invocations") {
    CHECK(run("table --out " + out1).exit_code == 0);
    CHECK(run("table --out " + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
  }
  SUBCASE("csv round-trip recomputes") {
    CHECK(run("table --p-steps 50 --pi0 0.3 --pi0 0.8 --out " + out1).exit_code == 0);
    std::ifstream in(out1);
    std::string line;
    std::getline(in, line);  // header
    int rows = 0;
    while (std::getline(in, line)) {
      std::istringstream ss(line);
      std::string cell;
      std::vector<double> cells;
      while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
      REQUIRE(cells.size() == 6);
      const blendstat::TestInput input(cells[0], cells[1]);
      const auto res = blendstat::blended_null_probability(input);
      CHECK(std::fabs(cells[2] - res.bayes_factor_lower) <= 1e-9);
      CHECK(std::fabs(cells[3] - res.lfdr_lower) <= 1e-9);
      CHECK(std::fabs(cells[4] - res.blended_null_prob) <= 1e-9);
      CHECK(std::fabs(cells[5] - blendstat::maxent_alternative(input)) <= 1e-9);
      ++rows;
    }
    CHECK(rows == 102);
  }
  SUBCASE("pi0 = 0 makes blended equal to p") {
    CHECK(run("table --p-steps 20 --pi0 0 --out " + out1).exit_code == 0);
    std::ifstream in(out1);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const auto first = line.substr(0, line.find(','));
      const auto blended_col = [&] {
        std::istringstream ss(line);
        std::string cell;
        for (int i = 0; i < 5; ++i) std::getline(ss, cell, ',');
        return cell;
      }();
      CHECK(first == blended_col);
    }
  }
  SUBCASE("unwritable path exits with status 1") {
    CHECK(run("table --out /nonexistent_dir/t.csv").exit_code == 1);
  }
  SUBCASE("bad grid exits with status 2") {
    CHECK(run("table --p-min 0 --out " + out1).exit_code == 2);
    CHECK(run("table --p-min 0.9 --p-max 0.1 --out " + out1).exit_code == 2);
  }
}

TEST_CASE("ttest subcommand") {
  SUBCASE("zero estimate gives p = blended = 1") {
    const auto r = run("ttest --estimate 0 --std-error 1 --df 10 --pi0-lower 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("p 1\n") != std::string::npos);
    CHECK(r.output.find("blended 1\n") != std::string::npos);
  }
  SUBCASE("t-ratio 2, df 10") {
    const auto r = run(
        "ttest --estimate 2 --std-error 1 --df 10 --pi0-lower 0.5 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["t_ratio"].get<double>() == 2.0);
    CHECK(doc["p"].get<double>() == doctest::Approx(0.07338803477).epsilon(1e-9));
    CHECK(doc["blended"].get<double>() ==
          doctest::Approx(0.3425659379).epsilon(1e-9));
  }
  SUBCASE("domain errors exit with status 2") {
    CHECK(run("ttest --estimate 1 --std-error 0 --df 10 --pi0-lower 0.5").exit_code == 2);
    CHECK(run("ttest --estimate 1 --std-error 1 --df -1 --pi0-lower 0.5").exit_code == 2);
  }
}

TEST_CASE("game subcommand") {
  const std::string problem = tmp_path("problem.json");

  SUBCASE("binary instance passes at grid 1e-4") {
    write_file(problem, R"({"atoms": ["0", "1"], "benchmark": [0.05, 0.95],
                            "lower": [0.28935, 0], "upper": [1, 1]})");
    const auto r = run("game --problem " + problem + " --grid-step 1e-4 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["result"] == "pass");
    CHECK(doc["discrepancy"].get<double>() < 5e-4);
    CHECK(doc["projection_0"].get<double>() == doctest::Approx(0.28935));
  }
  SUBCASE("benchmark inside the set gives value near 0") {
    write_file(problem, R"({"atoms": ["0", "1"], "benchmark": [0.5, 0.5],
                            "lower": [0.2, 0], "upper": [1, 1]})");
    const auto r = run("game --problem " + problem + " --grid-step 1e-3 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(std::fabs(doc["game_value"].get<double>()) <= 5e-3);
    CHECK(doc["projection_0"].get<double>() == 0.5);
  }
  SUBCASE("infeasible set exits with status 3") {
    write_file(problem, R"({"atoms": ["0", "1"], "benchmark": [0, 1],
                            "lower": [0.2, 0], "upper": [1, 1]})");
    CHECK(run("game --problem " + problem).exit_code == 3);
  }
  SUBCASE("malformed file exits with status 2") {
    write_file(problem, "{\"atoms\": [\"0\", \"1\"], \"benchmark\": [0.5]");
    CHECK(run("game --problem " + problem).exit_code == 2);
    write_file(problem, R"({"atoms": ["0", "1"], "benchmark": [0.5, 0.5],
                            "lower": [0, 0]})");
    const auto r = run("game --problem " + problem);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("upper") != std::string::npos);
  }
  SUBCASE("missing file exits with status 1") {
    CHECK(run("game --problem /nonexistent/p.json").exit_code == 1);
  }
}
