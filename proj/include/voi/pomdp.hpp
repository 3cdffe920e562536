#pragma once

#include <cmath>
#include <concepts>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "voi/errors.hpp"

namespace voi {

template <typename Scalar>
using BeliefVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using DenseBelief = BeliefVector<double>;

/// Absolute tolerance for probability sums and normalization checks.
inline constexpr double kProbabilityTolerance = 1e-9;

/// Observations less likely than this are treated as impossible.
inline constexpr double kImpossibleObservation = 1e-12;

/// Finite-horizon POMDP stored as dense tables.
///
/// Layout:
///   transition(a)(s, s')   = T(s, a, s')
///   observation(a)(s', o)  = Z(s', a, o)
///   reward()(s, a)         = R(s, a)
template <typename Scalar_>
class DiscretePomdp {
 public:
  using Scalar = Scalar_;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  DiscretePomdp(std::vector<Matrix> transition, std::vector<Matrix> observation,
                Matrix reward, Vector initial_belief, int horizon,
                Scalar discount, Scalar r_max)
      : transition_(std::move(transition)),
        observation_(std::move(observation)),
        reward_(std::move(reward)),
        initial_belief_(std::move(initial_belief)),
        horizon_(horizon),
        discount_(discount),
        r_max_(r_max) {
    const auto actions = static_cast<Eigen::Index>(transition_.size());
    if (actions == 0) throw std::invalid_argument("model needs at least one action");
    if (static_cast<Eigen::Index>(observation_.size()) != actions)
      throw std::invalid_argument("observation tables must match action count");
    const Eigen::Index states = transition_.front().rows();
    const Eigen::Index obs = observation_.front().cols();
    if (states == 0 || obs == 0) throw std::invalid_argument("empty state or observation space");
    for (Eigen::Index a = 0; a < actions; ++a) {
      if (transition_[a].rows() != states || transition_[a].cols() != states)
        throw std::invalid_argument("transition table has wrong shape");
      if (observation_[a].rows() != states || observation_[a].cols() != obs)
        throw std::invalid_argument("observation table has wrong shape");
    }
    if (reward_.rows() != states || reward_.cols() != actions)
      throw std::invalid_argument("reward table has wrong shape");
    if (initial_belief_.size() != states)
      throw std::invalid_argument("initial belief has wrong length");
    if (horizon_ < 1) throw std::invalid_argument("horizon must be positive");
  }

  int num_states() const { return static_cast<int>(reward_.rows()); }
  int num_actions() const { return static_cast<int>(reward_.cols()); }
  int num_observations() const { return static_cast<int>(observation_.front().cols()); }

  const Matrix& transition(int a) const { return transition_[a]; }
  const Matrix& observation(int a) const { return observation_[a]; }
  const Matrix& reward() const { return reward_; }

  /// Column of Z(., a, o) over next states.
  auto observation_column(int a, int o) const { return observation_[a].col(o); }
  /// Column of R(., a) over states.
  auto rewards(int a) const { return reward_.col(a); }

  const Vector& initial_belief() const { return initial_belief_; }
  int horizon() const { return horizon_; }
  Scalar discount() const { return discount_; }
  Scalar r_max() const { return r_max_; }

  DiscretePomdp with_discount(Scalar discount) const {
    DiscretePomdp copy = *this;
    copy.discount_ = discount;
    return copy;
  }
  DiscretePomdp with_horizon(int horizon) const {
    DiscretePomdp copy = *this;
    copy.horizon_ = horizon;
    return copy;
  }

 private:
  std::vector<Matrix> transition_;
  std::vector<Matrix> observation_;
  Matrix reward_;
  Vector initial_belief_;
  int horizon_;
  Scalar discount_;
  Scalar r_max_;
};

using DiscretePOMDP = DiscretePomdp<double>;

/// Anything the belief primitives and the exact solver can recurse over:
/// an explicit model or a view that reinterprets one.
template <typename M>
concept BeliefSpaceModel = requires(const M& m, int a, int o) {
  typename M::Scalar;
  { m.num_states() } -> std::convertible_to<int>;
  { m.num_actions() } -> std::convertible_to<int>;
  { m.num_observations() } -> std::convertible_to<int>;
  { m.transition(a) };
  { m.observation_column(a, o) };
  { m.rewards(a) };
  { m.discount() } -> std::convertible_to<typename M::Scalar>;
};

template <typename Derived>
bool is_valid_belief(const Eigen::MatrixBase<Derived>& b,
                     double tolerance = kProbabilityTolerance) {
  if (b.size() == 0 || !b.allFinite()) return false;
  if ((b.array() < 0).any()) return false;
  return std::abs(static_cast<double>(b.sum()) - 1.0) <= tolerance;
}

/// Unnormalized predicted distribution over next states, sum_s T(s,a,s') b(s).
template <BeliefSpaceModel Model, typename Derived>
BeliefVector<typename Model::Scalar> predict(const Model& model,
                                             const Eigen::MatrixBase<Derived>& b, int a) {
  return model.transition(a).transpose() * b;
}

/// P(o | b, a).
template <BeliefSpaceModel Model, typename Derived>
typename Model::Scalar observation_likelihood(const Model& model,
                                              const Eigen::MatrixBase<Derived>& b, int a,
                                              int o) {
  return model.observation_column(a, o).dot(predict(model, b, a));
}

/// Bayes posterior tau(b, a, o). Throws ZeroProbabilityObservation when the
/// observation is impossible under (b, a).
template <BeliefSpaceModel Model, typename Derived>
BeliefVector<typename Model::Scalar> belief_update_closed(
    const Model& model, const Eigen::MatrixBase<Derived>& b, int a, int o) {
  BeliefVector<typename Model::Scalar> posterior =
      predict(model, b, a).cwiseProduct(model.observation_column(a, o));
  const auto mass = posterior.sum();
  if (!(mass >= kImpossibleObservation)) {
    std::ostringstream msg;
    msg << "observation " << o << " has probability " << mass << " under action " << a;
    throw ZeroProbabilityObservation(msg.str());
  }
  posterior /= mass;
  return posterior;
}

/// Open-loop update tau(b, a): the observation-marginalized posterior.
template <BeliefSpaceModel Model, typename Derived>
BeliefVector<typename Model::Scalar> belief_update_open(const Model& model,
                                                        const Eigen::MatrixBase<Derived>& b,
                                                        int a) {
  BeliefVector<typename Model::Scalar> next = predict(model, b, a);
  next /= next.sum();
  return next;
}

/// r(b, a) = sum_s b(s) R(s, a).
template <BeliefSpaceModel Model, typename Derived>
typename Model::Scalar expected_reward(const Model& model, const Eigen::MatrixBase<Derived>& b,
                                       int a) {
  return model.rewards(a).dot(b);
}

/// Lists every table invariant the model violates; empty when well formed.
template <typename Scalar>
std::vector<std::string> validate_model(const DiscretePomdp<Scalar>& model) {
  std::vector<std::string> report;
  const double tol = kProbabilityTolerance;
  auto describe = [](auto&&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
  };

  for (int a = 0; a < model.num_actions(); ++a) {
    const auto& t = model.transition(a);
    for (int s = 0; s < model.num_states(); ++s) {
      if (!t.row(s).allFinite() || (t.row(s).array() < 0).any())
        report.push_back(describe("transition row (", s, ",", a, ") has a negative or non-finite entry"));
      const double sum = static_cast<double>(t.row(s).sum());
      if (std::abs(sum - 1.0) > tol)
        report.push_back(describe("transition row (", s, ",", a, ") sums to ", sum));
    }
    const auto& z = model.observation(a);
    for (int sp = 0; sp < model.num_states(); ++sp) {
      if (!z.row(sp).allFinite() || (z.row(sp).array() < 0).any())
        report.push_back(describe("observation row (", sp, ",", a, ") has a negative or non-finite entry"));
      const double sum = static_cast<double>(z.row(sp).sum());
      if (std::abs(sum - 1.0) > tol)
        report.push_back(describe("observation row (", sp, ",", a, ") sums to ", sum));
    }
  }

  if (!(model.r_max() > 0)) report.push_back(describe("r_max ", model.r_max(), " is not positive"));
  for (int s = 0; s < model.num_states(); ++s) {
    for (int a = 0; a < model.num_actions(); ++a) {
      const auto r = model.reward()(s, a);
      if (!std::isfinite(static_cast<double>(r)))
        report.push_back(describe("reward (", s, ",", a, ") is not finite"));
      else if (std::abs(r) > model.r_max())
        report.push_back(describe("reward (", s, ",", a, ") = ", r, " exceeds r_max ", model.r_max()));
    }
  }

  if (!is_valid_belief(model.initial_belief()))
    report.push_back("initial belief is not a probability distribution");
  if (!(model.discount() >= 0 && model.discount() <= 1))
    report.push_back(describe("discount ", model.discount(), " is outside [0, 1]"));
  return report;
}

}  // namespace voi
