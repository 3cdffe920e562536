#include "voi/generative.hpp"

#include <stdexcept>

namespace voi {

TabularGenerativeModel::TabularGenerativeModel(DiscretePOMDP model, std::vector<bool> terminal)
    : model_(std::move(model)), terminal_(std::move(terminal)) {
  if (terminal_.empty()) terminal_.assign(static_cast<std::size_t>(model_.num_states()), false);
  if (terminal_.size() != static_cast<std::size_t>(model_.num_states()))
    throw std::invalid_argument("terminal mask length must equal the state count");
}

State TabularGenerativeModel::sample_initial(Rng& rng) const {
  return sample_categorical(model_.initial_belief(), rng);
}

OpenStep TabularGenerativeModel::step_open(State s, Action a, Rng& rng) const {
  const State next = sample_categorical(model_.transition(a).row(s), rng);
  return {next, model_.reward()(s, a)};
}

Observation TabularGenerativeModel::sample_observation(State next, Action a, Rng& rng) const {
  return sample_categorical(model_.observation(a).row(next), rng);
}

double TabularGenerativeModel::observation_weight(State next, Action a, Observation o) const {
  return model_.observation(a)(next, o);
}

bool TabularGenerativeModel::is_terminal(State s) const {
  return terminal_[static_cast<std::size_t>(s)];
}

}  // namespace voi
