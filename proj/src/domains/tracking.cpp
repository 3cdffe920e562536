#include "voi/domains/tracking.hpp"

#include <cmath>
#include <stdexcept>

namespace voi::domains {
namespace {

int draw(const std::vector<std::pair<int, double>>& outcomes, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0;
  for (const auto& [value, p] : outcomes) {
    acc += p;
    if (u < acc) return value;
  }
  return outcomes.back().first;
}

}  // namespace

TrackingModel::TrackingModel(TrackingParams params)
    : params_(params), cells_(params.grid_size * params.grid_size) {
  const int g = params_.grid_size;
  if (g < 2) throw std::invalid_argument("tracking grid must be at least 2x2");
  if (!(params_.p_correct > 0 && params_.p_correct <= 1))
    throw std::invalid_argument("p_correct must lie in (0, 1]");
  if (!(params_.stay_probability >= 0 && params_.stay_probability <= 1))
    throw std::invalid_argument("stay_probability must lie in [0, 1]");

  start_cell_ = (g / 2) * g + g / 2;
  moves_.resize(static_cast<std::size_t>(cells_));
  readings_.resize(static_cast<std::size_t>(cells_));
  for (int cell = 0; cell < cells_; ++cell) {
    const int row = cell / g, col = cell % g;

    std::vector<int> four;
    for (Action a : {kNorth, kSouth, kEast, kWest})
      if (int next = move(cell, a); next != cell) four.push_back(next);
    auto& m = moves_[cell];
    m.emplace_back(cell, params_.stay_probability);
    for (int next : four)
      m.emplace_back(next, (1 - params_.stay_probability) / static_cast<double>(four.size()));

    std::vector<int> eight;
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        const int r = row + dr, c = col + dc;
        if ((dr || dc) && r >= 0 && r < g && c >= 0 && c < g) eight.push_back(r * g + c);
      }
    auto& z = readings_[cell];
    z.emplace_back(cell, params_.p_correct);
    for (int near : eight)
      z.emplace_back(near, (1 - params_.p_correct) / static_cast<double>(eight.size()));
  }
}

int TrackingModel::move(int cell, Action a) const {
  const int g = params_.grid_size;
  const int row = cell / g, col = cell % g;
  switch (a) {
    case kNorth: return row > 0 ? cell - g : cell;
    case kSouth: return row + 1 < g ? cell + g : cell;
    case kEast: return col + 1 < g ? cell + 1 : cell;
    case kWest: return col > 0 ? cell - 1 : cell;
    default: return cell;
  }
}

double TrackingModel::reward(State s, Action a) const {
  const int agent = move(agent_cell(s), a);
  double p = 0;
  for (const auto& [cell, prob] : moves_[target_cell(s)])
    if (cell == agent) p += prob;
  return params_.reward_colocated * p;
}

State TrackingModel::sample_initial(Rng& rng) const {
  return encode(start_cell_, rng.index(cells_));
}

OpenStep TrackingModel::step_open(State s, Action a, Rng& rng) const {
  const int agent = move(agent_cell(s), a);
  const int target = draw(moves_[target_cell(s)], rng);
  return {encode(agent, target), reward(s, a)};
}

Observation TrackingModel::sample_observation(State next, Action, Rng& rng) const {
  return encode_observation(agent_cell(next), draw(readings_[target_cell(next)], rng));
}

double TrackingModel::observation_weight(State next, Action, Observation o) const {
  if (observed_agent_cell(o) != agent_cell(next)) return 0;
  const int reported = observed_target_cell(o);
  for (const auto& [cell, p] : readings_[target_cell(next)])
    if (cell == reported) return p;
  return 0;
}

DiscretePOMDP TrackingModel::explicit_model() const {
  if (params_.grid_size > 4)
    throw InfeasibleExplicitModel("explicit tracking tables are limited to grids of size 4");
  using Matrix = DiscretePOMDP::Matrix;
  const int S = num_states(), O = observation_count();
  std::vector<Matrix> transition(5, Matrix::Zero(S, S)), observation(5, Matrix::Zero(S, O));
  Matrix reward_table(S, 5);
  for (Action a = 0; a < 5; ++a) {
    for (State s = 0; s < S; ++s) {
      const int agent = move(agent_cell(s), a);
      for (const auto& [target, p] : moves_[target_cell(s)]) transition[a](s, encode(agent, target)) += p;
      reward_table(s, a) = reward(s, a);
    }
    for (State sp = 0; sp < S; ++sp)
      for (const auto& [reported, p] : readings_[target_cell(sp)])
        observation[a](sp, encode_observation(agent_cell(sp), reported)) += p;
  }
  DiscretePOMDP::Vector initial = DiscretePOMDP::Vector::Zero(S);
  for (int target = 0; target < cells_; ++target) initial(encode(start_cell_, target)) = 1.0 / cells_;
  return DiscretePOMDP(std::move(transition), std::move(observation), std::move(reward_table),
                       std::move(initial), params_.horizon, params_.discount, max_abs_reward());
}

}  // namespace voi::domains
