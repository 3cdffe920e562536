#pragma once

#include <span>
#include <vector>

#include "voi/generative.hpp"

namespace voi {

/// Equally weighted particle approximation of a belief.
class ParticleBelief {
 public:
  explicit ParticleBelief(std::vector<State> particles);

  /// count particles drawn from the model's initial distribution.
  static ParticleBelief from_initial(const GenerativeModel& model, int count, Rng& rng);

  std::span<const State> particles() const { return particles_; }
  int count() const { return static_cast<int>(particles_.size()); }

  friend bool operator==(const ParticleBelief&, const ParticleBelief&) = default;

 private:
  std::vector<State> particles_;
};

/// Uniform draw from the particle set.
State sample_state(const ParticleBelief& belief, Rng& rng);

/// Sequential importance resampling step: propagate every particle through
/// step_open, weight by observation_weight, then systematic resampling back
/// to the same particle count. Throws ParticleDepletion when the total
/// weight falls below 1e-12.
ParticleBelief sir_update(const ParticleBelief& belief, const GenerativeModel& model, Action a,
                          Observation o, Rng& rng);

/// Propagate every particle through step_open without weighting.
ParticleBelief propagate_open(const ParticleBelief& belief, const GenerativeModel& model,
                              Action a, Rng& rng);

/// Systematic resampling of `states` with unnormalized `weights` into
/// `count` equally weighted particles.
std::vector<State> systematic_resample(std::span<const State> states,
                                       std::span<const double> weights, int count, Rng& rng);

/// Empirical state histogram, for comparison against exact beliefs.
DenseBelief to_dense(const ParticleBelief& belief, int num_states);

}  // namespace voi
