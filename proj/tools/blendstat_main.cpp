// blendstat: blended Bayesian-frequentist posterior probabilities from the
// command line. Subcommands: point, table, ttest, game.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blendstat/confidence.hpp"
#include "blendstat/problem_io.hpp"
#include "blendstat/projection.hpp"
#include "blendstat/testing.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;
constexpr int kExitInfeasible = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct Field {
  std::string key;
  std::string value;
  bool numeric;
};

struct Record {
  std::vector<Field> fields;

  void add(const std::string& key, double v) { fields.push_back({key, fmt(v), true}); }
  void add(const std::string& key, const std::string& v) {
    fields.push_back({key, v, false});
  }

  void print(const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json doc;
      for (const auto& f : fields) {
        if (f.numeric) {
          doc[f.key] = std::stod(f.value);
        } else {
          doc[f.key] = f.value;
        }
      }
      std::cout << doc.dump() << "\n";
    } else {
      for (const auto& f : fields) {
        std::cout << f.key << " " << f.value << "\n";
      }
    }
  }
};

Record point_record(double p, double pi0) {
  const blendstat::TestInput input(p, pi0);
  const blendstat::BlendResult r = blendstat::blended_null_probability(input);
  Record rec;
  rec.add("p", p);
  rec.add("pi0_lower", pi0);
  rec.add("sellke", r.bayes_factor_lower);
  rec.add("lfdr_lower", r.lfdr_lower);
  rec.add("blended", r.blended_null_prob);
  rec.add("maxent", blendstat::maxent_alternative(input));
  rec.add("regime", blendstat::to_string(r.regime));
  return rec;
}

std::vector<double> default_pi0_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
  return grid;
}

int run_table(double p_min, double p_max, int p_steps,
              std::vector<double> pi0_list, const std::string& out_path) {
  if (!(p_min > 0.0 && p_min <= p_max && p_max <= 1.0)) {
    throw blendstat::DomainError("--p-min/--p-max must satisfy 0 < p-min <= p-max <= 1");
  }
  if (p_steps < 1) throw blendstat::DomainError("--p-steps must be >= 1");
  if (pi0_list.empty()) pi0_list = default_pi0_grid();

  std::vector<double> p_grid;
  for (int k = 0; k <= p_steps; ++k) {
    p_grid.push_back(p_min + (p_max - p_min) * k / p_steps);
  }
  const auto rows = blendstat::blend_table(p_grid, pi0_list);

  std::ofstream out(out_path);
  if (!out) throw std::ios_base::failure("cannot open output file: " + out_path);
  out << "p,pi0_lower,sellke,lfdr_lower,blended,maxent\n";
  for (const auto& row : rows) {
    out << fmt(row.p) << "," << fmt(row.pi0_lower) << "," << fmt(row.sellke)
        << "," << fmt(row.lfdr_lower) << "," << fmt(row.blended) << ","
        << fmt(row.maxent) << "\n";
  }
  if (!out) throw std::ios_base::failure("write failed: " + out_path);
  return kExitOk;
}

int run_game(const std::string& problem_path, double grid_step,
             const std::string& format) {
  const blendstat::GameProblem problem = blendstat::load_problem(problem_path);
  const blendstat::ProjectionResult proj =
      blendstat::blend(problem.set, problem.benchmark);
  const blendstat::GameSolution game =
      blendstat::maximin_bruteforce(problem.set, problem.benchmark, grid_step);
  const double divergence = proj.divergence_to_benchmark.value();
  const double discrepancy = std::fabs(game.value - divergence);
  const double tolerance = 5.0 * grid_step;

  Record rec;
  for (std::size_t i = 0; i < proj.projection.size(); ++i) {
    rec.add("projection_" + proj.projection.atoms()[i], proj.projection.prob(i));
  }
  rec.add("divergence", divergence);
  rec.add("game_value", game.value);
  for (std::size_t i = 0; i < game.statistician.size(); ++i) {
    rec.add("statistician_" + game.statistician.atoms()[i],
            game.statistician.prob(i));
  }
  rec.add("grid_step", grid_step);
  rec.add("discrepancy", discrepancy);
  rec.add("tolerance", tolerance);
  rec.add("result", discrepancy <= tolerance ? "pass" : "fail");
  rec.print(format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blended Bayesian-frequentist inference"};
  app.require_subcommand(1);

  // point
  auto* point = app.add_subcommand("point", "Blended null probability for one input");
  double p = 0.0;
  double pi0 = 0.0;
  std::string format = "text";
  point->add_option("--p", p, "Two-sided p-value in (0,1]")->required();
  point->add_option("--pi0-lower", pi0, "Lower bound on the prior null probability")
      ->required();
  point->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // table
  auto* table = app.add_subcommand("table", "Blended-probability table as CSV");
  double p_min = 0.005;
  double p_max = 1.0;
  int p_steps = 200;
  std::vector<double> pi0_list;
  std::string out_path;
  table->add_option("--p-min", p_min, "Smallest p-value on the grid");
  table->add_option("--p-max", p_max, "Largest p-value on the grid");
  table->add_option("--p-steps", p_steps, "Number of p-grid steps (rows = steps + 1)");
  table->add_option("--pi0", pi0_list,
                    "Prior lower bounds (default 0, 0.05, ..., 1)");
  table->add_option("--out", out_path, "Output CSV path")->required();

  // ttest
  auto* ttest = app.add_subcommand("ttest", "Blend a two-sided t-test");
  double estimate = 0.0;
  double std_error = 1.0;
  double df = 1.0;
  ttest->add_option("--estimate", estimate, "Sample mean or mean difference")
      ->required();
  ttest->add_option("--std-error", std_error, "Standard error of the estimate")
      ->required();
  ttest->add_option("--df", df, "Degrees of freedom")->required();
  ttest->add_option("--pi0-lower", pi0, "Lower bound on the prior null probability")
      ->required();
  ttest->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // game
  auto* game = app.add_subcommand("game", "Verify the maximin game against the projection");
  std::string problem_path;
  double grid_step = 1e-4;
  game->add_option("--problem", problem_path, "JSON problem file")->required();
  game->add_option("--grid-step", grid_step, "Brute-force grid step");
  game->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  }

  try {
    if (point->parsed()) {
      point_record(p, pi0).print(format);
      return kExitOk;
    }
    if (table->parsed()) {
      return run_table(p_min, p_max, p_steps, pi0_list, out_path);
    }
    if (ttest->parsed()) {
      const blendstat::LocationModel model(estimate, std_error, df);
      const double pv = blendstat::two_sided_p(model);
      Record rec;
      rec.add("t_ratio", std::fabs(estimate) / std_error);
      Record inner = point_record(pv, pi0);
      for (auto& f : inner.fields) rec.fields.push_back(std::move(f));
      rec.print(format);
      return kExitOk;
    }
    if (game->parsed()) {
      return run_game(problem_path, grid_step, format);
    }
  } catch (const blendstat::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
