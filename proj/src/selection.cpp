#include "voi/selection.hpp"

#include <algorithm>
#include <cmath>

namespace voi {

double bonus(double n_h, double n_ha, const BonusParams& p) {
  return std::pow(p.beta, 1 / p.xi) * std::pow(n_h, p.alpha / p.xi) / std::pow(n_ha, 1 - p.eta);
}

double ucb_voi(double q, Mode mode, double kappa_eff, double bonus_value) {
  if (mode == Mode::kOpenLoop) return q + bonus_value;
  return q - kappa_eff * std::abs(q) + bonus_value;
}

double kappa_effective(const PlannerConfig& cfg, double bonus_value, double return_bound) {
  switch (cfg.kappa_schedule) {
    case KappaSchedule::kFixed:
      return cfg.kappa;
    case KappaSchedule::kCountBased:
    case KappaSchedule::kCountBasedUnclipped: {
      const double kappa_max = cfg.effective_kappa_max();
      if (kappa_max <= 0) return 0;
      const double x = cfg.kappa / kappa_max * bonus_value;
      const double annealed = kappa_max * x / (1 + x);
      if (cfg.kappa_schedule == KappaSchedule::kCountBasedUnclipped || return_bound <= 0)
        return annealed;
      return std::min(annealed, bonus_value / (cfg.c_kappa * return_bound));
    }
  }
  return cfg.kappa;
}

double ucb_pouct(double q, double c, double n_h, double n_ha) {
  return q + c * std::sqrt(std::log(n_h) / n_ha);
}

double ucb_iucb(double q, double c, double n_h, double n_ha, double weight,
                double normalized_entropy) {
  return ucb_pouct(q, c, n_h, n_ha) + weight * normalized_entropy;
}

double normalized_entropy(std::span<const std::int64_t> counts) {
  double total = 0;
  int support = 0;
  for (auto n : counts)
    if (n > 0) total += static_cast<double>(n), ++support;
  if (support < 2) return 0;
  double h = 0;
  for (auto n : counts) {
    if (n <= 0) continue;
    const double p = static_cast<double>(n) / total;
    h -= p * std::log(p);
  }
  return h / std::log(static_cast<double>(support));
}

double return_bound(double r_max, double discount, int horizon) {
  if (discount >= 1) return r_max * horizon;
  return r_max * (1 - std::pow(discount, horizon)) / (1 - discount);
}

}  // namespace voi
