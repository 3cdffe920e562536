// Command-line front end: plan, bench, verify, solve-exact.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "voi/domains/tiger.hpp"
#include "voi/exact_solver.hpp"
#include "voi/harness/experiment.hpp"
#include "voi/harness/verify.hpp"
#include "voi/model_io.hpp"

namespace {

using nlohmann::json;
using namespace voi;

voi::DenseBelief parse_belief(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) values.push_back(std::stod(item));
  return Eigen::Map<const voi::DenseBelief>(values.data(), static_cast<Eigen::Index>(values.size()));
}

int run_plan(const std::string& path, const std::string& algorithm, int budget,
             std::uint64_t seed) {
  const auto cfg = harness::load_experiment(path);
  const auto domain = harness::make_domain(cfg.domain);
  const harness::AlgorithmEntry* entry = &cfg.algorithms.front();
  for (const auto& a : cfg.algorithms)
    if (a.label == algorithm) entry = &a;
  if (!algorithm.empty() && entry->label != algorithm)
    throw std::invalid_argument("no algorithm labelled '" + algorithm + "' in the config");

  PlannerConfig planner = entry->planner;
  planner.queries = budget > 0 ? budget : cfg.budgets.front();
  const auto result = harness::run_episode(domain, planner, {cfg.particles, cfg.execution_filter},
                                           seed);
  json out = harness::to_json(result);
  out["domain"] = domain.name;
  out["algorithm"] = entry->label;
  out["budget"] = planner.queries;
  out["seed"] = seed;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_bench(const std::string& path, std::string out_path, int threads) {
  const auto cfg = harness::load_experiment(path);
  if (out_path.empty()) out_path = cfg.output;
  const auto rows = harness::run_experiment(cfg, threads);
  if (out_path.empty() || out_path == "-") {
    harness::write_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    harness::write_csv(out, rows);
  }
  int failed = 0;
  for (const auto& r : rows) failed += r.failed_trials;
  return failed > 0 ? 3 : 0;
}

int run_verify(const std::string& level, bool invert) {
  harness::VerifyOptions options;
  options.level = level == "full" ? harness::VerifyLevel::kFull : harness::VerifyLevel::kFast;
  options.invert_mode_rule = invert;
  const auto report = harness::verify(options);
  std::cout << harness::to_json(report).dump(2) << '\n';
  return report.passed() ? 0 : 1;
}

int run_solve(const std::string& domain, const std::string& model_path, int depth, double kappa,
              const std::string& belief_text, double discount) {
  DiscretePOMDP model = [&] {
    if (!model_path.empty()) return load_model(model_path);
    if (domain != "tiger") throw std::invalid_argument("solve-exact supports --domain tiger or --model");
    return domains::build_tiger();
  }();
  if (discount >= 0) model = model.with_discount(discount);
  const DenseBelief b = belief_text.empty() ? model.initial_belief() : parse_belief(belief_text);
  if (!is_valid_belief(b) || b.size() != model.num_states())
    throw std::invalid_argument("belief is not a distribution over the model's states");

  ExactSolver<DiscretePOMDP> solver(model);
  const double v_star = solver.optimal(b, depth);
  const double v_ol = solver.open_loop(b, depth);
  const auto adaptive = solver.adaptive(b, depth, kappa);
  json out = {{"depth", depth},
              {"kappa", kappa},
              {"discount", model.discount()},
              {"v_star", v_star},
              {"v_cl", v_star},
              {"v_ol", v_ol},
              {"v_hat", adaptive.value},
              {"v_hat_ol", adaptive.ol_value},
              {"v_hat_cl", adaptive.cl_value},
              {"root_mode", to_string(adaptive.chosen_mode)},
              {"root_action", adaptive.best_action},
              {"simple_voi", v_star - v_ol},
              {"adaptive_voi", adaptive.cl_value - adaptive.ol_value},
              {"regret", std::abs(v_star - adaptive.value)},
              {"nodes_expanded", solver.nodes_expanded()}};
  if (model.discount() < 1)
    out["regret_bound"] = regret_bound(kappa, model.r_max(), model.discount(), depth);
  else
    out["regret_bound"] = nullptr;
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online POMDP planning with adaptive value of information"};
  app.require_subcommand(1);

  std::string config, algorithm, out, level = "fast", domain = "tiger", model, belief;
  int budget = 0, depth = 3;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::uint64_t seed = 0;
  double kappa = 0, discount = -1;
  bool invert = false;

  auto* plan = app.add_subcommand("plan", "Run one episode and print its result as JSON");
  plan->add_option("--config", config, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  plan->add_option("--algorithm", algorithm, "Algorithm label from the config");
  plan->add_option("--budget", budget, "Simulations per step (default: first budget)");
  plan->add_option("--seed", seed, "Episode seed");

  auto* bench = app.add_subcommand("bench", "Run an experiment grid and write CSV");
  bench->add_option("--config", config, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  bench->add_option("--out", out, "CSV path, '-' for stdout (default: config output)");
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check exact-solver invariants");
  verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_flag("--invert-mode-rule", invert, "Negative control: invert the mode rule");

  auto* solve = app.add_subcommand("solve-exact", "Exact values at one belief");
  solve->add_option("--domain", domain, "Built-in explicit domain (tiger)");
  solve->add_option("--model", model, "Explicit model file (JSON)")->check(CLI::ExistingFile);
  solve->add_option("--depth", depth, "Lookahead depth")->check(CLI::NonNegativeNumber);
  solve->add_option("--kappa", kappa, "Mode penalty")->check(CLI::Range(0.0, 1.0));
  solve->add_option("--belief", belief, "Comma-separated belief (default: initial)");
  solve->add_option("--discount", discount, "Override the model discount");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*plan) return run_plan(config, algorithm, budget, seed);
    if (*bench) return run_bench(config, out, threads);
    if (*verify) return run_verify(level, invert);
    if (*solve) return run_solve(domain, model, depth, kappa, belief, discount);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
