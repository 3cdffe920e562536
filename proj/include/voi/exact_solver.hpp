#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "voi/pomdp.hpp"
#include "voi/voi_transform.hpp"

namespace voi {

/// Value of the kappa-adaptive backup at one belief.
template <typename Scalar>
struct AdaptiveValueResult {
  Scalar value = 0;
  Mode chosen_mode = Mode::kOpenLoop;
  int best_action = 0;
  Scalar ol_value = 0;
  Scalar cl_value = 0;
};

struct ExactSolverOptions {
  std::int64_t node_cap = 10'000'000;
  /// Negative control for the verification suite: picks the open-loop
  /// backup exactly when the adaptive rule would reject it.
  bool invert_mode_rule = false;
};

/// Full belief-tree expansion over actions and every observation with
/// P(o | b, a) >= 1e-12. Nothing is memoized; the node cap bounds the work of
/// a single top-level call.
template <BeliefSpaceModel Model>
class ExactSolver {
 public:
  using Scalar = typename Model::Scalar;
  using Vector = BeliefVector<Scalar>;

  explicit ExactSolver(const Model& model, ExactSolverOptions options = {})
      : model_(model), options_(options) {}

  /// V*_d(b), the closed-loop Bellman recursion.
  Scalar optimal(const Vector& b, int depth) {
    reset();
    return optimal_rec(b, depth);
  }

  /// Q*_d(b, a) for every action.
  std::vector<Scalar> optimal_q(const Vector& b, int depth) {
    reset();
    std::vector<Scalar> q(static_cast<std::size_t>(model_.num_actions()));
    for (int a = 0; a < model_.num_actions(); ++a)
      q[static_cast<std::size_t>(a)] = closed_backup(b, a, depth, [this](const Vector& next, int d) {
        return optimal_rec(next, d);
      });
    return q;
  }

  /// V^OL_d(b): every step uses the observation-marginalized update.
  Scalar open_loop(const Vector& b, int depth) {
    reset();
    return open_loop_rec(b, depth);
  }

  AdaptiveValueResult<Scalar> adaptive(const Vector& b, int depth, Scalar kappa) {
    check_kappa(kappa);
    reset();
    return adaptive_rec(b, depth, kappa);
  }

  std::int64_t nodes_expanded() const { return nodes_; }

 private:
  void reset() { nodes_ = 0; }

  void visit() {
    if (++nodes_ > options_.node_cap)
      throw ExpansionBudgetExceeded("exact expansion exceeded the node cap");
  }

  static void check_kappa(Scalar kappa) {
    if (!(kappa >= 0 && kappa <= 1)) throw std::invalid_argument("kappa must lie in [0, 1]");
  }

  /// r(b,a) + gamma * sum_o P(o|b,a) * next_value(tau(b,a,o), depth-1).
  template <typename NextValue>
  Scalar closed_backup(const Vector& b, int a, int depth, NextValue&& next_value) {
    Scalar q = expected_reward(model_, b, a);
    if (depth <= 1) return q;
    const Vector predicted = predict(model_, b, a);
    Scalar future = 0;
    for (int o = 0; o < model_.num_observations(); ++o) {
      Vector posterior = predicted.cwiseProduct(model_.observation_column(a, o));
      const Scalar p = posterior.sum();
      if (p < kImpossibleObservation) continue;
      posterior /= p;
      future += p * next_value(posterior, depth - 1);
    }
    return q + model_.discount() * future;
  }

  template <typename NextValue>
  Scalar open_backup(const Vector& b, int a, int depth, NextValue&& next_value) {
    Scalar q = expected_reward(model_, b, a);
    if (depth <= 1) return q;
    return q + model_.discount() * next_value(belief_update_open(model_, b, a), depth - 1);
  }

  Scalar optimal_rec(const Vector& b, int depth) {
    if (depth == 0) return 0;
    visit();
    Scalar best = -std::numeric_limits<Scalar>::infinity();
    for (int a = 0; a < model_.num_actions(); ++a) {
      const Scalar q = closed_backup(b, a, depth, [this](const Vector& next, int d) {
        return optimal_rec(next, d);
      });
      if (q > best) best = q;
    }
    return best;
  }

  Scalar open_loop_rec(const Vector& b, int depth) {
    if (depth == 0) return 0;
    visit();
    Scalar best = -std::numeric_limits<Scalar>::infinity();
    for (int a = 0; a < model_.num_actions(); ++a) {
      const Scalar q = open_backup(b, a, depth, [this](const Vector& next, int d) {
        return open_loop_rec(next, d);
      });
      if (q > best) best = q;
    }
    return best;
  }

  AdaptiveValueResult<Scalar> adaptive_rec(const Vector& b, int depth, Scalar kappa) {
    if (depth == 0) return {};
    visit();
    auto continuation = [this, kappa](const Vector& next, int d) {
      return adaptive_rec(next, d, kappa).value;
    };
    AdaptiveValueResult<Scalar> out;
    out.ol_value = out.cl_value = -std::numeric_limits<Scalar>::infinity();
    int best_ol = 0, best_cl = 0;
    for (int a = 0; a < model_.num_actions(); ++a) {
      const Scalar ol = open_backup(b, a, depth, continuation);
      if (ol > out.ol_value) out.ol_value = ol, best_ol = a;
      const Scalar cl = closed_backup(b, a, depth, continuation);
      if (cl > out.cl_value) out.cl_value = cl, best_cl = a;
    }
    const Scalar threshold = out.cl_value - kappa * std::abs(out.cl_value);
    const bool open = options_.invert_mode_rule ? out.ol_value <= threshold
                                                : out.ol_value >= threshold;
    out.chosen_mode = open ? Mode::kOpenLoop : Mode::kClosedLoop;
    out.best_action = open ? best_ol : best_cl;
    out.value = open ? out.ol_value : out.cl_value;
    return out;
  }

  const Model& model_;
  ExactSolverOptions options_;
  std::int64_t nodes_ = 0;
};

/// Value of the VOI-POMDP computed on the augmented model itself: Q' over
/// all 2|A| actions with the generic Bayes update through Z', the policy
/// taken as the argmax of Q' (open-loop) or Q' - kappa|Q'| (closed-loop),
/// and the backed-up value the unpenalized Q' of that action.
template <BeliefSpaceModel Model>
class VoiPomdpSolver {
 public:
  using Scalar = typename Model::Scalar;
  using Vector = BeliefVector<Scalar>;

  struct Backup {
    Scalar value = 0;
    int best_action = 0;  // augmented index
  };

  explicit VoiPomdpSolver(const Model& base, ExactSolverOptions options = {})
      : view_(base), options_(options) {}

  Backup solve(const Vector& b, int depth, Scalar kappa) {
    if (!(kappa >= 0 && kappa <= 1)) throw std::invalid_argument("kappa must lie in [0, 1]");
    nodes_ = 0;
    return solve_rec(b, depth, kappa);
  }

  const VoiPomdpView<Model>& view() const { return view_; }

 private:
  Backup solve_rec(const Vector& b, int depth, Scalar kappa) {
    if (depth == 0) return {};
    if (++nodes_ > options_.node_cap)
      throw ExpansionBudgetExceeded("exact expansion exceeded the node cap");

    Backup best;
    Scalar best_score = -std::numeric_limits<Scalar>::infinity();
    for (int a = 0; a < view_.num_actions(); ++a) {
      Scalar q = expected_reward(view_, b, a);
      if (depth > 1) {
        const Vector predicted = predict(view_, b, a);
        Scalar future = 0;
        for (int o = 0; o < view_.num_observations(); ++o) {
          Vector posterior = predicted.cwiseProduct(view_.observation_column(a, o));
          const Scalar p = posterior.sum();
          if (p < kImpossibleObservation) continue;
          posterior /= p;
          future += p * solve_rec(posterior, depth - 1, kappa).value;
        }
        q += view_.discount() * future;
      }
      const Scalar score =
          view_.action(a).mode == Mode::kClosedLoop ? q - kappa * std::abs(q) : q;
      if (score > best_score) {
        best_score = score;
        best = {q, a};
      }
    }
    return best;
  }

  VoiPomdpView<Model> view_;
  ExactSolverOptions options_;
  std::int64_t nodes_ = 0;
};

template <BeliefSpaceModel Model>
auto exact_value(const Model& model, const BeliefVector<typename Model::Scalar>& b, int depth,
                 ExactSolverOptions options = {}) {
  return ExactSolver<Model>(model, options).optimal(b, depth);
}

template <BeliefSpaceModel Model>
auto exact_value_cl(const Model& model, const BeliefVector<typename Model::Scalar>& b, int depth,
                    ExactSolverOptions options = {}) {
  return ExactSolver<Model>(model, options).optimal(b, depth);
}

template <BeliefSpaceModel Model>
auto exact_value_ol(const Model& model, const BeliefVector<typename Model::Scalar>& b, int depth,
                    ExactSolverOptions options = {}) {
  return ExactSolver<Model>(model, options).open_loop(b, depth);
}

template <BeliefSpaceModel Model>
auto exact_value_adaptive(const Model& model, const BeliefVector<typename Model::Scalar>& b,
                          int depth, typename Model::Scalar kappa,
                          ExactSolverOptions options = {}) {
  return ExactSolver<Model>(model, options).adaptive(b, depth, kappa);
}

template <BeliefSpaceModel Model>
auto exact_value_voipomdp(const Model& model, const BeliefVector<typename Model::Scalar>& b,
                          int depth, typename Model::Scalar kappa,
                          ExactSolverOptions options = {}) {
  return VoiPomdpSolver<Model>(model, options).solve(b, depth, kappa).value;
}

/// V^CL_d(b) - V^OL_d(b).
template <BeliefSpaceModel Model>
auto simple_voi(const Model& model, const BeliefVector<typename Model::Scalar>& b, int depth,
                ExactSolverOptions options = {}) {
  ExactSolver<Model> solver(model, options);
  return solver.optimal(b, depth) - solver.open_loop(b, depth);
}

/// Vhat^CL_d(b) - Vhat^OL_d(b) at the given kappa.
template <BeliefSpaceModel Model>
auto adaptive_voi(const Model& model, const BeliefVector<typename Model::Scalar>& b, int depth,
                  typename Model::Scalar kappa, ExactSolverOptions options = {}) {
  const auto r = ExactSolver<Model>(model, options).adaptive(b, depth, kappa);
  return r.cl_value - r.ol_value;
}

/// |V*_d(b) - Vhat*_d(b)|.
template <BeliefSpaceModel Model>
auto regret(const Model& model, const BeliefVector<typename Model::Scalar>& b, int depth,
            typename Model::Scalar kappa, ExactSolverOptions options = {}) {
  ExactSolver<Model> solver(model, options);
  return std::abs(solver.optimal(b, depth) - solver.adaptive(b, depth, kappa).value);
}

/// kappa * r_max / (1 - gamma) * (1 - gamma^d) / (1 - gamma). Undefined,
/// and rejected, at gamma = 1.
inline double regret_bound(double kappa, double r_max, double gamma, int depth) {
  if (!(gamma >= 0 && gamma < 1))
    throw std::domain_error("regret bound requires a discount in [0, 1)");
  const double horizon_factor = (1 - std::pow(gamma, depth)) / (1 - gamma);
  return kappa * (r_max / (1 - gamma)) * horizon_factor;
}

}  // namespace voi
