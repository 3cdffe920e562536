#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace voi {

enum class Algorithm { kVoimcp, kPoUct, kIUcb, kOpenLoop };

enum class KappaSchedule {
  kFixed,
  /// kappa_max * x / (1 + x), x = (kappa / kappa_max) * B, additionally
  /// capped so the penalty stays below B / (c_kappa * return bound).
  kCountBased,
  /// The uncapped count-based form.
  kCountBasedUnclipped,
};

enum class BonusKind { kPolynomial, kUcb1 };

enum class VoiActionSet { kAugmented, kClosedLoopOnly };

enum class Rollout { kRandom };

/// Polynomial exploration bonus beta^(1/xi) * N(h)^(alpha/xi) / N(ha)^(1-eta).
struct BonusParams {
  double beta = 10;
  double xi = 1;
  double alpha = 0.25;
  double eta = 0.5;

  /// beta^(1/xi) = c, alpha/xi = 1/4, eta = 1/2.
  static BonusParams from_constant(double c) { return {c, 1.0, 0.25, 0.5}; }

  friend bool operator==(const BonusParams&, const BonusParams&) = default;
};

struct PlannerConfig {
  Algorithm algorithm = Algorithm::kVoimcp;
  int queries = 1000;
  int horizon = 20;
  double discount = 0.95;

  BonusParams bonus;
  /// Optional per-depth override of `bonus`; depth i uses entry
  /// min(i, size - 1).
  std::vector<BonusParams> bonus_by_depth;

  double kappa = 0.02;
  KappaSchedule kappa_schedule = KappaSchedule::kFixed;
  /// Non-positive means min(2 * kappa, 1).
  double kappa_max = 0;
  double c_kappa = 2;

  /// UCB1 constant for PO-UCT and I-UCB, and for VOIMCP with BonusKind::kUcb1.
  double ucb_c = 10;
  /// Weight of the normalized observation-entropy term in I-UCB.
  double entropy_weight = 10;

  BonusKind voi_bonus = BonusKind::kPolynomial;
  VoiActionSet voi_actions = VoiActionSet::kAugmented;
  Rollout rollout = Rollout::kRandom;

  std::uint64_t seed = 0;

  double effective_kappa_max() const {
    return kappa_max > 0 ? kappa_max : (2 * kappa < 1 ? 2 * kappa : 1.0);
  }
  const BonusParams& bonus_at(int depth) const;

  /// Throws std::invalid_argument on eta outside [1/2, 1), kappa outside
  /// [0, 1], queries < 1, horizon < 0 or c_kappa <= 1.
  void validate() const;

  friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

std::string_view to_string(Algorithm algorithm);
Algorithm algorithm_from_string(std::string_view name);
std::string_view to_string(KappaSchedule schedule);
KappaSchedule kappa_schedule_from_string(std::string_view name);

}  // namespace voi
