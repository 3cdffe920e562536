#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "voi/generative.hpp"
#include "voi/pomdp.hpp"

namespace voi::domains {

/// Grid target tracking. The agent knows its own cell; the target performs a
/// lazy random walk and is seen through a noisy position sensor.
///
/// Target step: stay with `stay_probability`, otherwise move to a uniformly
/// chosen in-grid 4-neighbour. Sensor: reports the true target cell with
/// probability `p_correct`, otherwise a uniformly chosen in-grid 8-neighbour
/// of it. Reward: `reward_colocated` when agent and target share a cell after
/// the move, taken in expectation over the target's step so R depends on
/// (s, a) only.
struct TrackingParams {
  int grid_size = 10;
  double p_correct = 0.7;
  double stay_probability = 0.5;
  double reward_colocated = 1.0;
  int horizon = 20;
  double discount = 0.95;
  std::uint64_t seed = 0;
};

class TrackingModel final : public GenerativeModel {
 public:
  static constexpr int kStay = 0, kNorth = 1, kSouth = 2, kEast = 3, kWest = 4;

  explicit TrackingModel(TrackingParams params);

  int action_count() const override { return 5; }
  int observation_count() const override { return cells_ * cells_; }
  double max_abs_reward() const override { return std::abs(params_.reward_colocated); }

  State sample_initial(Rng& rng) const override;
  OpenStep step_open(State s, Action a, Rng& rng) const override;
  Observation sample_observation(State next, Action a, Rng& rng) const override;
  double observation_weight(State next, Action a, Observation o) const override;

  int num_states() const { return cells_ * cells_; }
  int grid_size() const { return params_.grid_size; }
  const TrackingParams& params() const { return params_; }

  State encode(int agent_cell, int target_cell) const { return agent_cell * cells_ + target_cell; }
  int agent_cell(State s) const { return s / cells_; }
  int target_cell(State s) const { return s % cells_; }
  /// Observation = agent cell (exact) and reported target cell.
  Observation encode_observation(int agent_cell, int reported_target) const {
    return agent_cell * cells_ + reported_target;
  }
  int observed_agent_cell(Observation o) const { return o / cells_; }
  int observed_target_cell(Observation o) const { return o % cells_; }

  int move(int cell, Action a) const;
  /// Target successor cells with probabilities, in a fixed order.
  const std::vector<std::pair<int, double>>& target_moves(int cell) const { return moves_[cell]; }
  /// Reported-target cells with probabilities, in a fixed order.
  const std::vector<std::pair<int, double>>& sensor_readings(int cell) const { return readings_[cell]; }
  double reward(State s, Action a) const;

  /// Explicit tables; throws InfeasibleExplicitModel for grids larger than 4.
  DiscretePOMDP explicit_model() const;

 private:
  TrackingParams params_;
  int cells_;
  int start_cell_;
  std::vector<std::vector<std::pair<int, double>>> moves_;
  std::vector<std::vector<std::pair<int, double>>> readings_;
};

}  // namespace voi::domains
