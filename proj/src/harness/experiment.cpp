#include "voi/harness/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <thread>

#include "voi/random.hpp"

namespace voi::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Summary summarize(const std::vector<double>& values) {
  Summary s;
  const auto n = static_cast<double>(values.size());
  if (values.empty()) return {kNaN, kNaN};
  for (double v : values) s.mean += v;
  s.mean /= n;
  if (values.size() < 2) {
    s.ci95 = kNaN;
    return s;
  }
  double ss = 0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.ci95 = 1.96 * std::sqrt(ss / (n - 1)) / std::sqrt(n);
  return s;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, int threads) {
  const Domain domain = make_domain(cfg.domain);
  const FilterConfig filter{cfg.particles, cfg.execution_filter};
  std::vector<ResultRow> rows;

  for (const auto& entry : cfg.algorithms) {
    for (int budget : cfg.budgets) {
      PlannerConfig planner = entry.planner;
      planner.queries = budget;

      std::vector<std::optional<EpisodeResult>> results(static_cast<std::size_t>(cfg.trials));
      std::atomic<int> next{0};
      auto worker = [&] {
        for (int i = next++; i < cfg.trials; i = next++) {
          try {
            results[static_cast<std::size_t>(i)] =
                run_episode(domain, planner, filter, derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
          } catch (const std::exception& e) {
            std::cerr << "trial " << i << " of " << entry.label << " @" << budget
                      << " failed: " << e.what() << '\n';
          }
        }
      };
      const int workers = std::max(1, std::min(threads, cfg.trials));
      if (workers == 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
      }

      ResultRow row;
      row.domain = domain.name;
      row.algorithm = entry.label;
      row.budget = budget;
      std::vector<double> returns;
      double depth = 0, branching = 0, wall = 0;
      for (const auto& r : results) {
        if (!r) {
          ++row.failed_trials;
          continue;
        }
        returns.push_back(r->discounted_return);
        depth += r->mean_max_depth();
        branching += r->mean_eff_branching();
        wall += r->wall_time * 1000;
        row.depletion_events += r->depletion_events;
      }
      row.trials = static_cast<int>(returns.size());
      const Summary s = summarize(returns);
      row.mean_return = s.mean;
      row.ci95 = s.ci95;
      const double n = row.trials > 0 ? row.trials : kNaN;
      row.mean_max_depth = depth / n;
      row.mean_eff_branching = branching / n;
      row.mean_wall_ms = cfg.record_wall_time ? wall / n : kNaN;
      if (row.failed_trials > 0)
        std::cerr << "warning: " << row.failed_trials << " failed trials in " << entry.label
                  << " @" << budget << '\n';
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.domain << ',' << r.algorithm << ',' << r.budget << ',' << r.trials << ','
        << format_number(r.mean_return) << ',' << format_number(r.ci95) << ','
        << format_number(r.mean_max_depth) << ',' << format_number(r.mean_eff_branching) << ','
        << format_number(r.mean_wall_ms) << '\n';
  }
}

}  // namespace voi::harness
