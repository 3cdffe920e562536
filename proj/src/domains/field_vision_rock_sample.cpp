#include "voi/domains/field_vision_rock_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace voi::domains {

FvrsModel::FvrsModel(FvrsParams params) : params_(params) {
  const int n = params_.n, k = params_.k;
  if (n < 1) throw std::invalid_argument("FVRS grid size must be positive");
  if (k < 0 || k > 16) throw std::invalid_argument("FVRS rock count must lie in [0, 16]");
  if (k > n * n - 1) throw std::invalid_argument("too many rocks for the grid");
  if (!(params_.half_efficiency_distance > 0))
    throw std::invalid_argument("half_efficiency_distance must be positive");

  r_max_ = std::max({std::abs(params_.reward_good), std::abs(params_.reward_bad),
                     std::abs(params_.reward_exit), std::abs(params_.reward_sample_empty)});
  start_cell_ = (n / 2) * n;

  std::vector<int> cells;
  for (int c = 0; c < n * n; ++c)
    if (c != start_cell_) cells.push_back(c);
  Rng rng(params_.seed);
  for (int i = 0; i < k; ++i) {
    const int j = i + rng.index(static_cast<int>(cells.size()) - i);
    std::swap(cells[i], cells[j]);
  }
  rock_cells_.assign(cells.begin(), cells.begin() + k);
  rock_at_cell_.assign(static_cast<std::size_t>(n * n), -1);
  for (int r = 0; r < k; ++r) rock_at_cell_[rock_cells_[r]] = r;

  accuracy_.resize(static_cast<std::size_t>(n * n * k));
  for (int c = 0; c < n * n; ++c)
    for (int r = 0; r < k; ++r) {
      const double dr = c / n - rock_cells_[r] / n, dc = c % n - rock_cells_[r] % n;
      accuracy_[c * k + r] = accuracy_at_distance(std::hypot(dr, dc));
    }
}

double FvrsModel::accuracy_at_distance(double distance) const {
  return 0.5 * (1 + std::exp2(-distance / params_.half_efficiency_distance));
}

double FvrsModel::sensor_accuracy(int cell, int rock) const {
  return accuracy_[cell * params_.k + rock];
}

State FvrsModel::sample_initial(Rng& rng) const {
  unsigned bits = 0;
  for (int r = 0; r < params_.k; ++r)
    if (rng.uniform() < 0.5) bits |= 1u << r;
  return encode(start_cell_, bits);
}

OpenStep FvrsModel::transition(State s, Action a) const {
  if (is_terminal(s)) return {s, 0};
  const int n = params_.n;
  const int c = cell(s), row = c / n, col = c % n;
  unsigned bits = rocks(s);
  switch (a) {
    case kNorth: return {encode(row > 0 ? c - n : c, bits), 0};
    case kSouth: return {encode(row + 1 < n ? c + n : c, bits), 0};
    case kEast:
      if (col + 1 == n) return {terminal_state(), params_.reward_exit};
      return {encode(c + 1, bits), 0};
    case kWest: return {encode(col > 0 ? c - 1 : c, bits), 0};
    case kSample: {
      const int rock = rock_at_cell_[c];
      if (rock < 0) return {s, params_.reward_sample_empty};
      const bool good = (bits >> rock) & 1u;
      bits &= ~(1u << rock);
      return {encode(c, bits), good ? params_.reward_good : params_.reward_bad};
    }
    default: throw std::out_of_range("FVRS action out of range");
  }
}

OpenStep FvrsModel::step_open(State s, Action a, Rng&) const { return transition(s, a); }

Observation FvrsModel::sample_observation(State next, Action, Rng& rng) const {
  if (is_terminal(next)) return 0;
  const int c = cell(next);
  const unsigned bits = rocks(next);
  unsigned reading = 0;
  for (int r = 0; r < params_.k; ++r) {
    const unsigned truth = (bits >> r) & 1u;
    const unsigned bit = rng.uniform() < sensor_accuracy(c, r) ? truth : 1u - truth;
    reading |= bit << r;
  }
  return static_cast<Observation>(reading);
}

double FvrsModel::observation_weight(State next, Action, Observation o) const {
  if (is_terminal(next)) return o == 0 ? 1.0 : 0.0;
  const int c = cell(next);
  const unsigned bits = rocks(next);
  double w = 1;
  for (int r = 0; r < params_.k; ++r) {
    const double acc = sensor_accuracy(c, r);
    w *= (((bits ^ static_cast<unsigned>(o)) >> r) & 1u) ? 1 - acc : acc;
  }
  return w;
}

DiscretePOMDP FvrsModel::explicit_model() const {
  if (params_.n > 3 || params_.k > 2)
    throw InfeasibleExplicitModel("explicit FVRS tables are limited to n <= 3, k <= 2");
  using Matrix = DiscretePOMDP::Matrix;
  const int S = num_states(), O = observation_count();
  std::vector<Matrix> trans(5, Matrix::Zero(S, S)), obs(5, Matrix::Zero(S, O));
  Matrix reward(S, 5);
  for (Action a = 0; a < 5; ++a) {
    for (State s = 0; s < S; ++s) {
      const auto [next, r] = transition(s, a);
      trans[a](s, next) = 1;
      reward(s, a) = r;
    }
    for (State sp = 0; sp < S; ++sp)
      for (Observation o = 0; o < O; ++o) obs[a](sp, o) = observation_weight(sp, a, o);
  }
  DiscretePOMDP::Vector initial = DiscretePOMDP::Vector::Zero(S);
  for (unsigned bits = 0; bits < (1u << params_.k); ++bits)
    initial(encode(start_cell_, bits)) = 1.0 / (1 << params_.k);
  return DiscretePOMDP(std::move(trans), std::move(obs), std::move(reward), std::move(initial),
                       params_.horizon, params_.discount, r_max_);
}

}  // namespace voi::domains
