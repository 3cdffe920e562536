#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "voi/harness/config.hpp"
#include "voi/planner.hpp"

namespace voi::harness {

struct FilterConfig {
  int particles = 10000;
  ExecutionFilter mode = ExecutionFilter::kClosed;
};

struct EpisodeResult {
  double discounted_return = 0;
  int steps = 0;
  std::vector<int> max_depth;         // per planning step
  std::vector<double> eff_branching;  // per planning step
  std::vector<AugmentedAction> actions;
  double wall_time = 0;  // seconds
  int depletion_events = 0;

  double mean_max_depth() const;
  double mean_eff_branching() const;
};

/// Plan, act, observe, update until a terminal state or cfg.horizon steps.
///
/// Each step plans with the remaining horizon, executes the chosen action's
/// base action, and updates the particle belief with the real observation
/// (closed mode) or by open-loop propagation (open mode). A depleted
/// closed-loop update falls back to open-loop propagation and is counted.
/// The environment, filter and planner draw from separate streams derived
/// from `seed`; cfg.seed is not used.
EpisodeResult run_episode(const Domain& domain, const PlannerConfig& cfg,
                          const FilterConfig& filter, std::uint64_t seed);

nlohmann::json to_json(const EpisodeResult& result, bool include_wall_time = true);

}  // namespace voi::harness
