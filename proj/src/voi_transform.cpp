#include "voi/voi_transform.hpp"

namespace voi {

std::string_view to_string(Mode mode) { return mode == Mode::kOpenLoop ? "OL" : "CL"; }

Step augmented_step(const GenerativeModel& model, State s, AugmentedAction a, Rng& rng) {
  if (a.mode == Mode::kClosedLoop) return model.step(s, a.base, rng);
  const auto [next, reward] = model.step_open(s, a.base, rng);
  return {next, null_observation(model.observation_count()), reward};
}

}  // namespace voi
