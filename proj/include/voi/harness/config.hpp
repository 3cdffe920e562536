#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "voi/generative.hpp"
#include "voi/planner_config.hpp"

namespace voi::harness {

/// A benchmark environment ready to simulate. The same generative model
/// serves as environment and as planner simulator.
struct Domain {
  std::string name;
  std::shared_ptr<const GenerativeModel> model;
  int horizon = 20;
  double discount = 0.95;
  /// Explicit tables, when the instance is small enough to materialize.
  std::shared_ptr<const DiscretePOMDP> explicit_model;
};

/// Builds a domain from {"name": "tiger" | "tracking" | "fvrs", ...}.
/// Accepted parameters per domain:
///   tiger:    listen_accuracy, reward_listen, reward_correct_door,
///             reward_wrong_door, horizon, discount
///   tracking: grid_size, p_correct, stay_probability, reward_colocated,
///             horizon, discount, seed
///   fvrs:     n, k, half_efficiency_distance, reward_good, reward_bad,
///             reward_exit, reward_sample_empty, horizon, discount, seed
/// Unknown keys are rejected.
Domain make_domain(const nlohmann::json& spec);

enum class ExecutionFilter { kClosed, kOpen };

struct AlgorithmEntry {
  std::string label;
  PlannerConfig planner;
};

struct ExperimentConfig {
  nlohmann::json domain;
  std::vector<AlgorithmEntry> algorithms;
  std::vector<int> budgets;
  int trials = 1;
  int particles = 10000;
  std::uint64_t seed = 0;
  std::string output;
  ExecutionFilter execution_filter = ExecutionFilter::kClosed;
  /// Wall-clock timings vary run to run; when false the mean_wall_ms column
  /// is written as nan so the CSV stays reproducible.
  bool record_wall_time = false;
};

/// Planner settings from JSON. Missing keys keep the values in `defaults`.
/// "c" is shorthand that sets both beta^(1/xi) and ucb_c.
PlannerConfig planner_from_json(const nlohmann::json& doc, PlannerConfig defaults = {});
nlohmann::json to_json(const PlannerConfig& cfg);

/// Parses and validates an experiment document. Planner horizon and
/// discount default to the domain's.
ExperimentConfig experiment_from_json(const nlohmann::json& doc);
ExperimentConfig load_experiment(const std::string& path);

std::string_view to_string(ExecutionFilter filter);

}  // namespace voi::harness
