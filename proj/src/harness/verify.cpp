#include "voi/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "voi/domains/field_vision_rock_sample.hpp"
#include "voi/domains/tiger.hpp"
#include "voi/domains/tracking.hpp"
#include "voi/exact_solver.hpp"

namespace voi::harness {
namespace {

struct Instance {
  DiscretePOMDP model;
  std::vector<DenseBelief> beliefs;
  int max_depth;
};

struct Accumulator {
  CheckResult result;

  Accumulator(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
    result.passed = true;
  }
  /// Records a signed violation; positive values beyond the tolerance fail.
  void add(double violation) {
    ++result.points;
    if (std::isnan(violation)) {
      result.passed = false;
      result.max_violation = violation;
      return;
    }
    result.max_violation = std::max(result.max_violation, violation);
    if (violation > result.tolerance) result.passed = false;
  }
};

std::vector<DenseBelief> tiger_grid() {
  std::vector<DenseBelief> grid;
  for (int i = 0; i <= 10; ++i) {
    DenseBelief b(2);
    b << i / 10.0, 1 - i / 10.0;
    grid.push_back(b);
  }
  return grid;
}

std::vector<Instance> instances(VerifyLevel level, double discount,
                                const domains::TigerParams& base = {}) {
  domains::TigerParams tiger = base;
  tiger.discount = discount;
  std::vector<Instance> out;
  out.push_back({domains::build_tiger(tiger), tiger_grid(), level == VerifyLevel::kFull ? 5 : 4});
  if (level == VerifyLevel::kFull && base.listen_accuracy != 0.5) {
    domains::FvrsParams fvrs;
    fvrs.n = 3, fvrs.k = 2, fvrs.discount = discount;
    auto rs = domains::FvrsModel(fvrs).explicit_model();
    out.push_back({rs, {rs.initial_belief()}, 3});
    domains::TrackingParams tr;
    tr.grid_size = 3, tr.discount = discount;
    auto tm = domains::TrackingModel(tr).explicit_model();
    out.push_back({tm, {tm.initial_belief()}, 2});
  }
  return out;
}

const std::vector<double> kKappas = {0, 0.05, 0.1, 0.3, 1};

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerifyReport verify(const VerifyOptions& options) {
  ExactSolverOptions solver_options;
  solver_options.invert_mode_rule = options.invert_mode_rule;

  Accumulator prop1("voi_pomdp_equivalence", 1e-9);
  Accumulator bound("regret_bound", 1e-12);
  Accumulator zero("zero_kappa_regret", 1e-12);
  Accumulator sandwich("value_sandwich", 1e-9);
  Accumulator jensen("jensen", 1e-9);
  Accumulator degenerate("uninformative_degeneracy", 1e-9);

  for (double gamma : {0.9, 0.95, 1.0}) {
    for (const auto& inst : instances(options.level, gamma)) {
      ExactSolver<DiscretePOMDP> solver(inst.model, solver_options);
      VoiPomdpSolver<DiscretePOMDP> voi(inst.model, solver_options);
      for (const auto& b : inst.beliefs) {
        for (int d = 1; d <= inst.max_depth; ++d) {
          const double v_star = solver.optimal(b, d);
          const double v_ol = solver.open_loop(b, d);
          jensen.add(v_ol - v_star);
          for (double kappa : kKappas) {
            const double v_hat = solver.adaptive(b, d, kappa).value;
            sandwich.add(std::max(v_ol - v_hat, v_hat - v_star));
            if (gamma == 0.95) prop1.add(std::abs(voi.solve(b, d, kappa).value - v_hat));
            if (gamma < 1) {
              const double regret = std::abs(v_star - v_hat);
              bound.add(regret - regret_bound(kappa, inst.model.r_max(), gamma, d));
              if (kappa == 0) zero.add(regret);
            }
          }
        }
      }
    }
  }

  domains::TigerParams flat;
  flat.listen_accuracy = 0.5;
  for (const auto& inst : instances(options.level, 0.95, flat)) {
    ExactSolver<DiscretePOMDP> solver(inst.model, solver_options);
    for (const auto& b : inst.beliefs) {
      for (int d = 1; d <= 4; ++d) {
        const double v_star = solver.optimal(b, d);
        const double v_ol = solver.open_loop(b, d);
        degenerate.add(std::abs(v_star - v_ol));
        for (double kappa : kKappas) {
          const double v_hat = solver.adaptive(b, d, kappa).value;
          degenerate.add(std::max(std::abs(v_hat - v_ol), std::abs(v_hat - v_star)));
        }
      }
    }
  }

  VerifyReport report;
  // A negative violation only means slack; report the worst case, floored at 0.
  for (auto* acc : {&prop1, &bound, &zero, &sandwich, &jensen, &degenerate}) {
    if (acc->result.max_violation < 0) acc->result.max_violation = 0;
    report.checks.push_back(acc->result);
  }
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"max_violation", c.max_violation},
                      {"tolerance", c.tolerance},
                      {"points", c.points}});
  return {{"status", report.passed() ? "pass" : "fail"}, {"checks", checks}};
}

}  // namespace voi::harness
