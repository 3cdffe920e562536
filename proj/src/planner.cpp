#include "voi/planner.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace voi {

const BonusParams& PlannerConfig::bonus_at(int depth) const {
  if (bonus_by_depth.empty()) return bonus;
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(depth), bonus_by_depth.size() - 1);
  return bonus_by_depth[i];
}

void PlannerConfig::validate() const {
  auto check_bonus = [](const BonusParams& b) {
    if (!(b.eta >= 0.5 && b.eta < 1)) throw std::invalid_argument("eta must lie in [1/2, 1)");
    if (!(b.xi > 0) || !(b.beta > 0)) throw std::invalid_argument("beta and xi must be positive");
  };
  check_bonus(bonus);
  for (const auto& b : bonus_by_depth) check_bonus(b);
  if (!(kappa >= 0 && kappa <= 1)) throw std::invalid_argument("kappa must lie in [0, 1]");
  if (kappa_max > 1) throw std::invalid_argument("kappa_max must not exceed 1");
  if (queries < 1) throw std::invalid_argument("queries must be at least 1");
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  if (!(discount >= 0 && discount <= 1)) throw std::invalid_argument("discount must lie in [0, 1]");
  if (!(c_kappa > 1)) throw std::invalid_argument("c_kappa must exceed 1");
  if (!(ucb_c >= 0) || !(entropy_weight >= 0))
    throw std::invalid_argument("exploration constants must be nonnegative");
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kVoimcp: return "voimcp";
    case Algorithm::kPoUct: return "pouct";
    case Algorithm::kIUcb: return "iucb";
    case Algorithm::kOpenLoop: return "openloop";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view name) {
  for (auto a : {Algorithm::kVoimcp, Algorithm::kPoUct, Algorithm::kIUcb, Algorithm::kOpenLoop})
    if (to_string(a) == name) return a;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(KappaSchedule schedule) {
  switch (schedule) {
    case KappaSchedule::kFixed: return "fixed";
    case KappaSchedule::kCountBased: return "count_based";
    case KappaSchedule::kCountBasedUnclipped: return "count_based_unclipped";
  }
  return "?";
}

KappaSchedule kappa_schedule_from_string(std::string_view name) {
  for (auto s : {KappaSchedule::kFixed, KappaSchedule::kCountBased,
                 KappaSchedule::kCountBasedUnclipped})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown kappa schedule '" + std::string(name) + "'");
}

std::vector<AugmentedAction> admissible_actions(const PlannerConfig& cfg, int num_base_actions) {
  std::vector<AugmentedAction> out;
  auto add_block = [&](Mode mode) {
    for (Action a = 0; a < num_base_actions; ++a) out.push_back({a, mode});
  };
  switch (cfg.algorithm) {
    case Algorithm::kVoimcp:
      if (cfg.voi_actions == VoiActionSet::kAugmented) add_block(Mode::kOpenLoop);
      add_block(Mode::kClosedLoop);
      break;
    case Algorithm::kPoUct:
    case Algorithm::kIUcb:
      add_block(Mode::kClosedLoop);
      break;
    case Algorithm::kOpenLoop:
      add_block(Mode::kOpenLoop);
      break;
  }
  return out;
}

double rollout(State s, int depth, const GenerativeModel& model, const PlannerConfig& cfg,
               Rng& rng) {
  double total = 0, weight = 1;
  const int actions = model.action_count();
  for (int d = depth; d < cfg.horizon && !model.is_terminal(s); ++d) {
    const auto [next, r] = model.step_open(s, rng.index(actions), rng);
    if (!(std::abs(r) <= model.max_abs_reward() * (1 + 1e-12)))
      throw ModelContractError("rollout reward exceeds the declared bound");
    total += weight * r;
    weight *= cfg.discount;
    s = next;
  }
  return total;
}

Planner::Planner(const GenerativeModel& model, PlannerConfig cfg)
    : model_(model),
      cfg_(std::move(cfg)),
      actions_(admissible_actions(cfg_, model.action_count())),
      return_bound_(return_bound(model.max_abs_reward(), cfg_.discount, cfg_.horizon)) {
  cfg_.validate();
}

SearchResult Planner::search(const ParticleBelief& belief, Rng& rng) {
  tree_ = SearchTree();
  for (int i = 0; i < cfg_.queries; ++i) simulate(sample_state(belief, rng), tree_.root(), 0, rng);

  SearchResult result;
  result.stats = tree_stats(tree_);
  const auto& root = tree_.node(tree_.root());
  if (root.actions.empty()) {
    result.best = actions_.front();
    return result;
  }
  double best_value = -std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  double weighted = 0;
  std::int64_t visits = 0;
  for (std::size_t i = 0; i < root.actions.size(); ++i) {
    const auto& a = root.actions[i];
    if (a.visits < 1) continue;
    weighted += static_cast<double>(a.visits) * a.value;
    visits += a.visits;
    if (a.value > best_value) best_value = a.value, best = i;
  }
  result.best = root.actions[best].action;
  result.root_value = visits > 0 ? weighted / static_cast<double>(visits) : 0;
  return result;
}

double Planner::score(const HistoryNode& node, const ActionNode& action) const {
  const auto n_h = static_cast<double>(node.visits);
  const auto n_ha = static_cast<double>(action.visits);
  switch (cfg_.algorithm) {
    case Algorithm::kPoUct:
      return ucb_pouct(action.value, cfg_.ucb_c, n_h, n_ha);
    case Algorithm::kIUcb: {
      std::vector<std::int64_t> counts;
      counts.reserve(action.children.size());
      for (const auto& e : action.children) counts.push_back(e.count);
      return ucb_iucb(action.value, cfg_.ucb_c, n_h, n_ha, cfg_.entropy_weight,
                      normalized_entropy(counts));
    }
    case Algorithm::kVoimcp:
    case Algorithm::kOpenLoop: {
      const double b = cfg_.voi_bonus == BonusKind::kUcb1
                           ? cfg_.ucb_c * std::sqrt(std::log(n_h) / n_ha)
                           : bonus(n_h, n_ha, cfg_.bonus_at(node.depth));
      const double kappa = kappa_effective(cfg_, b, return_bound_);
      assert(cfg_.kappa_schedule != KappaSchedule::kCountBased ||
             kappa * return_bound_ <= b / cfg_.c_kappa * (1 + 1e-12));
      return ucb_voi(action.value, action.action.mode, kappa, b);
    }
  }
  return action.value;
}

int Planner::select(NodeId id) const {
  const auto& node = tree_.node(id);
  int best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < node.actions.size(); ++i) {
    const auto& a = node.actions[i];
    if (a.visits == 0) return static_cast<int>(i);
    const double s = score(node, a);
    if (s > best_score) best_score = s, best = static_cast<int>(i);
  }
  return best;
}

void Planner::check_reward(double r) const {
  if (!(std::abs(r) <= model_.max_abs_reward() * (1 + 1e-12))) {
    std::ostringstream msg;
    msg << "reward " << r << " exceeds the declared bound " << model_.max_abs_reward();
    throw ModelContractError(msg.str());
  }
}

double Planner::simulate(State s, NodeId id, int depth, Rng& rng) {
  if (depth >= cfg_.horizon || model_.is_terminal(s)) return 0;
  if (!tree_.node(id).expanded) {
    tree_.expand(id, actions_);
    tree_.node(id).visits = 1;
    return estimator_ ? estimator_(model_, s, depth, rng) : rollout(s, depth, model_, cfg_, rng);
  }

  const int slot = select(id);
  const AugmentedAction action = tree_.node(id).actions[static_cast<std::size_t>(slot)].action;
  const Step step = augmented_step(model_, s, action, rng);
  check_reward(step.reward);

  ++tree_.node(id).visits;
  ++tree_.node(id).actions[static_cast<std::size_t>(slot)].visits;

  const NodeId child = tree_.child(id, slot, step.observation);
  const double ret = step.reward + cfg_.discount * simulate(step.next, child, depth + 1, rng);

  auto& stats = tree_.node(id).actions[static_cast<std::size_t>(slot)];
  stats.value += (ret - stats.value) / static_cast<double>(stats.visits);
  return ret;
}

SearchResult search(const ParticleBelief& belief, const GenerativeModel& model,
                    const PlannerConfig& cfg, Rng& rng) {
  Planner planner(model, cfg);
  return planner.search(belief, rng);
}

}  // namespace voi
