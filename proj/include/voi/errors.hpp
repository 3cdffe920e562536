#pragma once

#include <stdexcept>
#include <string>

namespace voi {

/// Observation has (numerically) zero probability under the belief and action.
struct ZeroProbabilityObservation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every propagated particle received zero observation weight.
struct ParticleDepletion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Null observation paired with a closed-loop action, or a real observation
/// paired with an open-loop action.
struct ModeObservationMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExpansionBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleExplicitModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A generative model produced something outside its declared contract
/// (e.g. a reward larger than max_abs_reward()).
struct ModelContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace voi
