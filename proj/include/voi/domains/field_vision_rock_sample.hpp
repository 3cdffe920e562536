#pragma once

#include <cstdint>
#include <vector>

#include "voi/generative.hpp"
#include "voi/pomdp.hpp"

namespace voi::domains {

/// RockSample variant in which every step returns a noisy good/bad reading
/// of every rock. Reading accuracy for a rock at Euclidean distance d is
/// 0.5 * (1 + 2^(-d / half_efficiency_distance)).
///
/// The robot starts in the middle of the west column; moving east off the
/// grid exits (terminal). Sampling a rock yields the good/bad reward and
/// turns the rock bad. Rock cells come from `seed`.
struct FvrsParams {
  int n = 5;
  int k = 5;
  double half_efficiency_distance = 2.0;
  double reward_good = 10;
  double reward_bad = -10;
  double reward_exit = 10;
  double reward_sample_empty = 0;
  int horizon = 20;
  double discount = 0.95;
  std::uint64_t seed = 0;
};

class FvrsModel final : public GenerativeModel {
 public:
  static constexpr int kNorth = 0, kSouth = 1, kEast = 2, kWest = 3, kSample = 4;

  explicit FvrsModel(FvrsParams params);

  int action_count() const override { return 5; }
  int observation_count() const override { return 1 << params_.k; }
  double max_abs_reward() const override { return r_max_; }

  State sample_initial(Rng& rng) const override;
  OpenStep step_open(State s, Action a, Rng& rng) const override;
  Observation sample_observation(State next, Action a, Rng& rng) const override;
  double observation_weight(State next, Action a, Observation o) const override;
  bool is_terminal(State s) const override { return s == terminal_state(); }

  int num_states() const { return params_.n * params_.n * (1 << params_.k) + 1; }
  State terminal_state() const { return params_.n * params_.n * (1 << params_.k); }
  State encode(int cell, unsigned rocks) const { return cell * (1 << params_.k) + static_cast<int>(rocks); }
  int cell(State s) const { return s >> params_.k; }
  unsigned rocks(State s) const { return static_cast<unsigned>(s) & ((1u << params_.k) - 1); }

  const FvrsParams& params() const { return params_; }
  const std::vector<int>& rock_cells() const { return rock_cells_; }
  int start_cell() const { return start_cell_; }

  /// Probability that the reading of `rock` is correct with the robot at `cell`.
  double sensor_accuracy(int cell, int rock) const;
  /// Sensor accuracy as a function of distance alone.
  double accuracy_at_distance(double distance) const;

  /// Deterministic successor and reward.
  OpenStep transition(State s, Action a) const;

  /// Explicit tables; throws InfeasibleExplicitModel beyond n = 3, k = 2.
  DiscretePOMDP explicit_model() const;

 private:
  FvrsParams params_;
  double r_max_;
  int start_cell_;
  std::vector<int> rock_cells_;
  std::vector<int> rock_at_cell_;    // rock index or -1
  std::vector<double> accuracy_;     // [cell * k + rock]
};

}  // namespace voi::domains
