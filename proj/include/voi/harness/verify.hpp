#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace voi::harness {

enum class VerifyLevel { kFast, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kFast;
  /// Negative control: run every check with the adaptive mode rule inverted.
  bool invert_mode_rule = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_violation = 0;
  double tolerance = 0;
  long points = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Exact-solver invariants over the Tiger belief grid (beliefs spaced 0.1,
/// depths 1-4, kappa in {0, 0.05, 0.1, 0.3, 1}):
///   voi_pomdp_equivalence     |Vhat' - Vhat*| <= 1e-9          (gamma 0.95)
///   regret_bound              regret <= bound + 1e-12           (gamma 0.9, 0.95)
///   zero_kappa_regret         regret <= 1e-12 at kappa 0        (gamma 0.9, 0.95)
///   value_sandwich            V^OL <= Vhat* <= V* within 1e-9   (gamma 0.9, 0.95, 1)
///   jensen                    V^OL <= V^CL within 1e-9          (gamma 0.9, 0.95, 1)
///   uninformative_degeneracy  VOI = 0, Vhat* = V^OL = V*        (listen accuracy 0.5)
/// The full level adds depth 5 on Tiger and the initial beliefs of small
/// explicit FieldVision RockSample and Tracking instances.
VerifyReport verify(const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyReport& report);

}  // namespace voi::harness
