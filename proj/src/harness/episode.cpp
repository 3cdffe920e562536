#include "voi/harness/episode.hpp"

#include <chrono>
#include <numeric>

#include "voi/random.hpp"

namespace voi::harness {

double EpisodeResult::mean_max_depth() const {
  if (max_depth.empty()) return 0;
  return std::accumulate(max_depth.begin(), max_depth.end(), 0.0) / static_cast<double>(max_depth.size());
}

double EpisodeResult::mean_eff_branching() const {
  if (eff_branching.empty()) return 0;
  return std::accumulate(eff_branching.begin(), eff_branching.end(), 0.0) /
         static_cast<double>(eff_branching.size());
}

EpisodeResult run_episode(const Domain& domain, const PlannerConfig& cfg,
                          const FilterConfig& filter, std::uint64_t seed) {
  const auto started = std::chrono::steady_clock::now();
  const GenerativeModel& model = *domain.model;
  Rng env_rng(derive_seed(seed, 0)), filter_rng(derive_seed(seed, 1)),
      plan_rng(derive_seed(seed, 2));

  EpisodeResult result;
  State state = model.sample_initial(env_rng);
  ParticleBelief belief = ParticleBelief::from_initial(model, filter.particles, filter_rng);

  double weight = 1;
  for (int t = 0; t < cfg.horizon && !model.is_terminal(state); ++t) {
    PlannerConfig step_cfg = cfg;
    step_cfg.horizon = cfg.horizon - t;
    Planner planner(model, step_cfg);
    const SearchResult plan = planner.search(belief, plan_rng);
    result.max_depth.push_back(plan.stats.max_depth);
    result.eff_branching.push_back(plan.stats.effective_branching);
    result.actions.push_back(plan.best);

    const Action a = plan.best.base;
    const Step step = model.step(state, a, env_rng);
    result.discounted_return += weight * step.reward;
    weight *= cfg.discount;
    state = step.next;
    ++result.steps;

    if (filter.mode == ExecutionFilter::kOpen) {
      belief = propagate_open(belief, model, a, filter_rng);
      continue;
    }
    try {
      belief = sir_update(belief, model, a, step.observation, filter_rng);
    } catch (const ParticleDepletion&) {
      ++result.depletion_events;
      belief = propagate_open(belief, model, a, filter_rng);
    }
  }
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

nlohmann::json to_json(const EpisodeResult& r, bool include_wall_time) {
  nlohmann::json actions = nlohmann::json::array();
  for (const auto& a : r.actions)
    actions.push_back({{"base", a.base}, {"mode", to_string(a.mode)}});
  nlohmann::json out = {{"discounted_return", r.discounted_return},
                        {"steps", r.steps},
                        {"max_depth", r.max_depth},
                        {"eff_branching", r.eff_branching},
                        {"actions", actions},
                        {"depletion_events", r.depletion_events}};
  if (include_wall_time) out["wall_time"] = r.wall_time;
  return out;
}

}  // namespace voi::harness
