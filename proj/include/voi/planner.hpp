#pragma once

#include <functional>
#include <span>
#include <vector>

#include "voi/generative.hpp"
#include "voi/particle_filter.hpp"
#include "voi/planner_config.hpp"
#include "voi/search_tree.hpp"
#include "voi/selection.hpp"

namespace voi {

struct SearchResult {
  AugmentedAction best;
  TreeStats stats;
  /// Visit-weighted mean of the root action values.
  double root_value = 0;
};

/// Leaf evaluator called when a history node is first expanded.
using ValueEstimator =
    std::function<double(const GenerativeModel&, State, int depth, Rng&)>;

/// Uniformly random base actions from `depth` until the horizon or a
/// terminal state; returns the discounted sum of rewards.
double rollout(State s, int depth, const GenerativeModel& model, const PlannerConfig& cfg,
               Rng& rng);

/// Actions a planner may take at every history node, in tie-break order.
/// VOIMCP: all open-loop then all closed-loop variants (or closed-loop
/// only for the ablation), PO-UCT and I-UCB: closed-loop, OpenLoop:
/// open-loop.
std::vector<AugmentedAction> admissible_actions(const PlannerConfig& cfg, int num_base_actions);

/// Monte Carlo tree search over histories of a generative model, shared by
/// VOIMCP, PO-UCT, I-UCB and the Open-Loop baseline. They differ only in the
/// admissible action set and the selection score.
class Planner {
 public:
  Planner(const GenerativeModel& model, PlannerConfig cfg);

  /// Builds a fresh tree with cfg.queries simulations from root states drawn
  /// from `belief`.
  SearchResult search(const ParticleBelief& belief, Rng& rng);

  const SearchTree& tree() const { return tree_; }
  const PlannerConfig& config() const { return cfg_; }
  std::span<const AugmentedAction> actions() const { return actions_; }

  void set_value_estimator(ValueEstimator estimator) { estimator_ = std::move(estimator); }

  /// Slot chosen by the selection rule at an expanded node: unvisited slots
  /// first in order, otherwise the highest score with ties to the lowest slot.
  int select(NodeId id) const;

  /// One simulation from `s` at node `id`; returns the sampled return.
  double simulate(State s, NodeId id, int depth, Rng& rng);

 private:
  double score(const HistoryNode& node, const ActionNode& action) const;
  void check_reward(double r) const;

  const GenerativeModel& model_;
  PlannerConfig cfg_;
  std::vector<AugmentedAction> actions_;
  double return_bound_;
  SearchTree tree_;
  ValueEstimator estimator_;
};

SearchResult search(const ParticleBelief& belief, const GenerativeModel& model,
                    const PlannerConfig& cfg, Rng& rng);

}  // namespace voi
