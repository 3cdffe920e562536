#include "voi/particle_filter.hpp"

#include <numeric>
#include <stdexcept>

namespace voi {

ParticleBelief::ParticleBelief(std::vector<State> particles) : particles_(std::move(particles)) {
  if (particles_.empty()) throw std::invalid_argument("particle belief needs at least one particle");
}

ParticleBelief ParticleBelief::from_initial(const GenerativeModel& model, int count, Rng& rng) {
  if (count < 1) throw std::invalid_argument("particle count must be positive");
  std::vector<State> states(static_cast<std::size_t>(count));
  for (auto& s : states) s = model.sample_initial(rng);
  return ParticleBelief(std::move(states));
}

State sample_state(const ParticleBelief& belief, Rng& rng) {
  return belief.particles()[static_cast<std::size_t>(rng.index(belief.count()))];
}

std::vector<State> systematic_resample(std::span<const State> states,
                                       std::span<const double> weights, int count, Rng& rng) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double spacing = total / count;
  double position = rng.uniform() * spacing;
  double cumulative = weights[0];
  std::size_t j = 0;
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    while (position >= cumulative && j + 1 < states.size()) cumulative += weights[++j];
    out.push_back(states[j]);
    position += spacing;
  }
  return out;
}

ParticleBelief sir_update(const ParticleBelief& belief, const GenerativeModel& model, Action a,
                          Observation o, Rng& rng) {
  const auto n = static_cast<std::size_t>(belief.count());
  std::vector<State> propagated(n);
  std::vector<double> weights(n);
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    propagated[i] = model.step_open(belief.particles()[i], a, rng).next;
    weights[i] = model.observation_weight(propagated[i], a, o);
    total += weights[i];
  }
  if (!(total >= kImpossibleObservation))
    throw ParticleDepletion("no particle is consistent with the observation");
  return ParticleBelief(systematic_resample(propagated, weights, belief.count(), rng));
}

ParticleBelief propagate_open(const ParticleBelief& belief, const GenerativeModel& model,
                              Action a, Rng& rng) {
  std::vector<State> next;
  next.reserve(static_cast<std::size_t>(belief.count()));
  for (State s : belief.particles()) next.push_back(model.step_open(s, a, rng).next);
  return ParticleBelief(std::move(next));
}

DenseBelief to_dense(const ParticleBelief& belief, int num_states) {
  DenseBelief hist = DenseBelief::Zero(num_states);
  for (State s : belief.particles()) hist(s) += 1.0;
  return hist / belief.count();
}

}  // namespace voi
