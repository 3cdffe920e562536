#pragma once

#include "voi/generative.hpp"
#include "voi/pomdp.hpp"

namespace voi::domains {

/// Classic two-door Tiger problem.
///
/// States: 0 = tiger behind left door, 1 = tiger behind right door.
/// Actions: 0 = listen, 1 = open left, 2 = open right.
/// Observations: 0 = hear left, 1 = hear right.
/// Opening a door resets the tiger uniformly and yields an uninformative
/// observation.
struct TigerParams {
  double listen_accuracy = 0.85;
  double reward_listen = -1;
  double reward_correct_door = 10;
  double reward_wrong_door = -100;
  int horizon = 20;
  double discount = 0.95;
};

namespace tiger {
inline constexpr int kTigerLeft = 0, kTigerRight = 1;
inline constexpr int kListen = 0, kOpenLeft = 1, kOpenRight = 2;
inline constexpr int kHearLeft = 0, kHearRight = 1;
}  // namespace tiger

DiscretePOMDP build_tiger(const TigerParams& params = {});

}  // namespace voi::domains
