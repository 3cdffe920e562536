#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "voi/pomdp.hpp"
#include "voi/random.hpp"

namespace voi {

using State = std::int32_t;
using Action = std::int32_t;
using Observation = std::int32_t;

struct OpenStep {
  State next;
  double reward;
};

struct Step {
  State next;
  Observation observation;
  double reward;
};

/// Sampling interface used by the online planners and the particle filter.
///
/// step() is step_open() followed by an observation draw on the sampled next
/// state, so both consume the rng identically up to the observation.
class GenerativeModel {
 public:
  virtual ~GenerativeModel() = default;

  virtual int action_count() const = 0;
  virtual int observation_count() const = 0;
  virtual double max_abs_reward() const = 0;

  virtual State sample_initial(Rng& rng) const = 0;
  virtual OpenStep step_open(State s, Action a, Rng& rng) const = 0;
  virtual Observation sample_observation(State next, Action a, Rng& rng) const = 0;
  /// Proportional to Z(next, a, o).
  virtual double observation_weight(State next, Action a, Observation o) const = 0;
  virtual bool is_terminal(State) const { return false; }

  Step step(State s, Action a, Rng& rng) const {
    const auto [next, reward] = step_open(s, a, rng);
    return {next, sample_observation(next, a, rng), reward};
  }
};

/// Inverse-CDF draw over a row stored in index order.
template <typename Derived>
int sample_categorical(const Eigen::DenseBase<Derived>& probs, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0;
  const auto n = static_cast<int>(probs.size());
  for (int i = 0; i < n; ++i) {
    acc += static_cast<double>(probs(i));
    if (u < acc) return i;
  }
  // Round-off left u above the final cumulative sum; fall back to the last
  // positive entry.
  for (int i = n - 1; i >= 0; --i)
    if (probs(i) > 0) return i;
  return n - 1;
}

/// Generative model that samples directly from a DiscretePOMDP's tables.
class TabularGenerativeModel final : public GenerativeModel {
 public:
  explicit TabularGenerativeModel(DiscretePOMDP model, std::vector<bool> terminal = {});

  int action_count() const override { return model_.num_actions(); }
  int observation_count() const override { return model_.num_observations(); }
  double max_abs_reward() const override { return model_.r_max(); }

  State sample_initial(Rng& rng) const override;
  OpenStep step_open(State s, Action a, Rng& rng) const override;
  Observation sample_observation(State next, Action a, Rng& rng) const override;
  double observation_weight(State next, Action a, Observation o) const override;
  bool is_terminal(State s) const override;

  const DiscretePOMDP& model() const { return model_; }

 private:
  DiscretePOMDP model_;
  std::vector<bool> terminal_;
};

}  // namespace voi
