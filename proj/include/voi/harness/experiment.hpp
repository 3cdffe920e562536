#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "voi/harness/config.hpp"
#include "voi/harness/episode.hpp"

namespace voi::harness {

/// Aggregate over the trials of one (algorithm, budget) point.
struct ResultRow {
  std::string domain;
  std::string algorithm;
  int budget = 0;
  int trials = 0;  // trials that completed
  double mean_return = 0;
  double ci95 = 0;  // NaN with fewer than two trials
  double mean_max_depth = 0;
  double mean_eff_branching = 0;
  double mean_wall_ms = 0;  // NaN unless wall time is recorded
  int failed_trials = 0;
  int depletion_events = 0;
};

struct Summary {
  double mean = 0;
  double ci95 = 0;
};

/// Mean and normal-approximation 95% half-width 1.96 * sd / sqrt(n), with
/// the sample standard deviation. The half-width is NaN for n < 2.
Summary summarize(const std::vector<double>& values);

/// Trial i of every (algorithm, budget) point uses seed
/// derive_seed(cfg.seed, i). Trials run on `threads` workers; rows are
/// assembled in trial order so the output does not depend on `threads`.
/// Trials that throw are counted in failed_trials and reported on stderr.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, int threads = 1);

inline constexpr const char* kCsvHeader =
    "domain,algorithm,budget,trials,mean_return,ci95,mean_max_depth,mean_eff_branching,"
    "mean_wall_ms";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

}  // namespace voi::harness
