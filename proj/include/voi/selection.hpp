#pragma once

#include <cstdint>
#include <span>

#include "voi/planner_config.hpp"
#include "voi/voi_transform.hpp"

namespace voi {

/// beta^(1/xi) * N(h)^(alpha/xi) / N(ha)^(1-eta). Requires both counts >= 1.
double bonus(double n_h, double n_ha, const BonusParams& params);

/// VOI-deflated optimistic score: open-loop q + B, closed-loop
/// q - kappa_eff * |q| + B.
double ucb_voi(double q, Mode mode, double kappa_eff, double bonus_value);

/// Penalty weight in force at a node with confidence width `bonus_value`.
/// `return_bound` is the largest possible |return|, used by the capped
/// count-based schedule.
double kappa_effective(const PlannerConfig& cfg, double bonus_value, double return_bound);

/// q + c * sqrt(ln N(h) / N(ha)).
double ucb_pouct(double q, double c, double n_h, double n_ha);

/// PO-UCT score plus weight * normalized_entropy.
double ucb_iucb(double q, double c, double n_h, double n_ha, double weight,
                double normalized_entropy);

/// Shannon entropy of the empirical distribution given by `counts`, divided
/// by the log of the number of nonzero entries; 0 with fewer than two.
double normalized_entropy(std::span<const std::int64_t> counts);

/// Largest |discounted return| over `horizon` steps of rewards bounded by r_max.
double return_bound(double r_max, double discount, int horizon);

}  // namespace voi
