#pragma once

#include <vector>

#include "voi/domains/tiger.hpp"
#include "voi/pomdp.hpp"

namespace support {


using Matrix = Eigen::MatrixXd;

inline voi::DenseBelief belief(std::initializer_list<double> values) {
  voi::DenseBelief b(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) b(i++) = v;
  return b;
}

// States 0..n-1 walk deterministically to the next state, the last one
// absorbs. One action, reward r everywhere, a single observation.
inline voi::DiscretePOMDP chain(int n, double r, double gamma, int horizon) {
  Matrix t = Matrix::Zero(n, n);
  for (int s = 0; s < n; ++s) t(s, std::min(s + 1, n - 1)) = 1;
  Matrix z = Matrix::Ones(n, 1);
  Matrix reward = Matrix::Constant(n, 1, r);
  voi::DenseBelief b0 = voi::DenseBelief::Zero(n);
  b0(0) = 1;
  return voi::DiscretePOMDP({t}, {z}, reward, b0, horizon, gamma, std::max(std::abs(r), 1.0));
}

// Two states, identity dynamics, observation reveals the state exactly.
inline voi::DiscretePOMDP revealing(double gamma = 0.95) {
  Matrix id = Matrix::Identity(2, 2);
  Matrix reward(2, 2);
  reward << 1, 0, 0, 1;
  return voi::DiscretePOMDP({id, id}, {id, id}, reward, belief({0.5, 0.5}), 5, gamma, 1);
}

inline voi::DiscretePOMDP tiger_model(double gamma = 0.95, double accuracy = 0.85) {
  voi::domains::TigerParams p;
  p.discount = gamma;
  p.listen_accuracy = accuracy;
  return voi::domains::build_tiger(p);
}

inline std::vector<voi::DenseBelief> tiger_grid() {
  std::vector<voi::DenseBelief> out;
  for (int i = 0; i <= 10; ++i) out.push_back(belief({i / 10.0, 1 - i / 10.0}));
  return out;
}

}  // namespace support
