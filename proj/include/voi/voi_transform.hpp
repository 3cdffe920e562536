#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

#include "voi/generative.hpp"
#include "voi/pomdp.hpp"

namespace voi {

enum class Mode : std::uint8_t { kOpenLoop, kClosedLoop };

std::string_view to_string(Mode mode);

/// An original action paired with an execution mode.
struct AugmentedAction {
  Action base = 0;
  Mode mode = Mode::kClosedLoop;

  friend auto operator<=>(const AugmentedAction&, const AugmentedAction&) = default;
};

/// Index of the null observation for a model with `num_observations` real ones.
constexpr Observation null_observation(int num_observations) { return num_observations; }

/// Augmented action index layout: open-loop variants 0..|A|-1, then
/// closed-loop variants |A|..2|A|-1.
constexpr int encode_action(AugmentedAction a, int num_base_actions) {
  return a.mode == Mode::kOpenLoop ? a.base : num_base_actions + a.base;
}
constexpr AugmentedAction decode_action(int index, int num_base_actions) {
  return index < num_base_actions ? AugmentedAction{index, Mode::kOpenLoop}
                                  : AugmentedAction{index - num_base_actions, Mode::kClosedLoop};
}

/// The VOI-POMDP of an explicit model, exposed as a lightweight view.
///
/// Transitions and rewards route to the base action; open-loop actions emit
/// the null observation (index |O|) with probability one, closed-loop actions
/// keep the original observation law. Satisfies BeliefSpaceModel so the
/// generic Bayes update applies unchanged.
template <typename Model>
class VoiPomdpView {
 public:
  using Scalar = typename Model::Scalar;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit VoiPomdpView(const Model& base) : base_(&base) {}

  const Model& base() const { return *base_; }

  int num_states() const { return base_->num_states(); }
  int num_actions() const { return 2 * base_->num_actions(); }
  int num_observations() const { return base_->num_observations() + 1; }
  Observation null_observation() const { return voi::null_observation(base_->num_observations()); }

  AugmentedAction action(int index) const { return decode_action(index, base_->num_actions()); }
  int index(AugmentedAction a) const { return encode_action(a, base_->num_actions()); }

  decltype(auto) transition(int a) const { return base_->transition(action(a).base); }
  decltype(auto) rewards(int a) const { return base_->rewards(action(a).base); }

  Vector observation_column(int a, int o) const {
    const AugmentedAction aa = action(a);
    const bool is_null = o == null_observation();
    if (aa.mode == Mode::kOpenLoop) return Vector::Constant(num_states(), is_null ? 1 : 0);
    if (is_null) return Vector::Zero(num_states());
    return base_->observation_column(aa.base, o);
  }

  /// Z'(s', a', o').
  Scalar observation(int next_state, int a, int o) const {
    return observation_column(a, o)(next_state);
  }
  Scalar transition(int s, int a, int next_state) const {
    return transition(a)(s, next_state);
  }
  Scalar reward(int s, int a) const { return rewards(a)(s); }

  Scalar discount() const { return base_->discount(); }
  int horizon() const { return base_->horizon(); }
  Scalar r_max() const { return base_->r_max(); }
  decltype(auto) initial_belief() const { return base_->initial_belief(); }

 private:
  const Model* base_;
};

template <typename Model>
VoiPomdpView<Model> augment(const Model& model) {
  return VoiPomdpView<Model>(model);
}

/// One draw of the augmented generative model. Closed-loop actions delegate
/// to step(); open-loop actions delegate to step_open() and report the null
/// observation.
Step augmented_step(const GenerativeModel& model, State s, AugmentedAction a, Rng& rng);

/// Belief update under an augmented action. Open-loop requires the null
/// observation and returns tau(b, a); closed-loop requires a real
/// observation and returns tau(b, a, o).
template <typename Scalar, typename Derived>
BeliefVector<Scalar> augmented_belief_update(const DiscretePomdp<Scalar>& model,
                                             const Eigen::MatrixBase<Derived>& b,
                                             AugmentedAction a, Observation o) {
  const bool is_null = o == null_observation(model.num_observations());
  if (a.mode == Mode::kOpenLoop) {
    if (!is_null) throw ModeObservationMismatch("open-loop action requires the null observation");
    return belief_update_open(model, b, a.base);
  }
  if (is_null) throw ModeObservationMismatch("closed-loop action cannot receive the null observation");
  return belief_update_closed(model, b, a.base, o);
}

}  // namespace voi
