#include "voi/domains/tiger.hpp"

#include <algorithm>
#include <cmath>

namespace voi::domains {

DiscretePOMDP build_tiger(const TigerParams& p) {
  using namespace tiger;
  using Matrix = DiscretePOMDP::Matrix;

  std::vector<Matrix> transition(3), observation(3);
  transition[kListen] = Matrix::Identity(2, 2);
  transition[kOpenLeft] = transition[kOpenRight] = Matrix::Constant(2, 2, 0.5);

  observation[kListen].resize(2, 2);
  observation[kListen] << p.listen_accuracy, 1 - p.listen_accuracy,
                          1 - p.listen_accuracy, p.listen_accuracy;
  observation[kOpenLeft] = observation[kOpenRight] = Matrix::Constant(2, 2, 0.5);

  Matrix reward(2, 3);
  reward(kTigerLeft, kListen) = reward(kTigerRight, kListen) = p.reward_listen;
  reward(kTigerLeft, kOpenLeft) = p.reward_wrong_door;
  reward(kTigerLeft, kOpenRight) = p.reward_correct_door;
  reward(kTigerRight, kOpenLeft) = p.reward_correct_door;
  reward(kTigerRight, kOpenRight) = p.reward_wrong_door;

  const double r_max = std::max({std::abs(p.reward_listen), std::abs(p.reward_correct_door),
                                 std::abs(p.reward_wrong_door)});
  return DiscretePOMDP(std::move(transition), std::move(observation), std::move(reward),
                       DiscretePOMDP::Vector::Constant(2, 0.5), p.horizon, p.discount, r_max);
}

}  // namespace voi::domains
