#include "voi/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "voi/domains/field_vision_rock_sample.hpp"
#include "voi/domains/tiger.hpp"
#include "voi/domains/tracking.hpp"

namespace voi::harness {
namespace {

using nlohmann::json;

void reject_unknown(const json& doc, const std::set<std::string>& known, const std::string& where) {
  if (!doc.is_object()) throw std::invalid_argument(where + " must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (!known.contains(key)) throw std::invalid_argument(where + ": unknown key '" + key + "'");
}

template <typename T>
void read(const json& doc, const char* key, T& out) {
  if (auto it = doc.find(key); it != doc.end()) out = it->get<T>();
}

BonusParams bonus_from_json(const json& doc, BonusParams out) {
  reject_unknown(doc, {"beta", "xi", "alpha", "eta"}, "bonus");
  read(doc, "beta", out.beta);
  read(doc, "xi", out.xi);
  read(doc, "alpha", out.alpha);
  read(doc, "eta", out.eta);
  return out;
}

json bonus_to_json(const BonusParams& b) {
  return {{"beta", b.beta}, {"xi", b.xi}, {"alpha", b.alpha}, {"eta", b.eta}};
}

}  // namespace

std::string_view to_string(ExecutionFilter filter) {
  return filter == ExecutionFilter::kClosed ? "closed" : "open";
}

Domain make_domain(const json& spec) {
  const auto name = spec.at("name").get<std::string>();
  Domain domain;
  domain.name = name;

  if (name == "tiger") {
    reject_unknown(spec, {"name", "listen_accuracy", "reward_listen", "reward_correct_door",
                          "reward_wrong_door", "horizon", "discount"},
                   "tiger domain");
    domains::TigerParams p;
    read(spec, "listen_accuracy", p.listen_accuracy);
    read(spec, "reward_listen", p.reward_listen);
    read(spec, "reward_correct_door", p.reward_correct_door);
    read(spec, "reward_wrong_door", p.reward_wrong_door);
    read(spec, "horizon", p.horizon);
    read(spec, "discount", p.discount);
    auto model = std::make_shared<const DiscretePOMDP>(domains::build_tiger(p));
    domain.model = std::make_shared<const TabularGenerativeModel>(*model);
    domain.explicit_model = std::move(model);
    domain.horizon = p.horizon;
    domain.discount = p.discount;
  } else if (name == "tracking") {
    reject_unknown(spec, {"name", "grid_size", "p_correct", "stay_probability",
                          "reward_colocated", "horizon", "discount", "seed"},
                   "tracking domain");
    domains::TrackingParams p;
    read(spec, "grid_size", p.grid_size);
    read(spec, "p_correct", p.p_correct);
    read(spec, "stay_probability", p.stay_probability);
    read(spec, "reward_colocated", p.reward_colocated);
    read(spec, "horizon", p.horizon);
    read(spec, "discount", p.discount);
    read(spec, "seed", p.seed);
    auto model = std::make_shared<const domains::TrackingModel>(p);
    if (p.grid_size <= 4)
      domain.explicit_model = std::make_shared<const DiscretePOMDP>(model->explicit_model());
    domain.model = std::move(model);
    domain.horizon = p.horizon;
    domain.discount = p.discount;
  } else if (name == "fvrs") {
    reject_unknown(spec, {"name", "n", "k", "half_efficiency_distance", "reward_good",
                          "reward_bad", "reward_exit", "reward_sample_empty", "horizon",
                          "discount", "seed"},
                   "fvrs domain");
    domains::FvrsParams p;
    read(spec, "n", p.n);
    read(spec, "k", p.k);
    read(spec, "half_efficiency_distance", p.half_efficiency_distance);
    read(spec, "reward_good", p.reward_good);
    read(spec, "reward_bad", p.reward_bad);
    read(spec, "reward_exit", p.reward_exit);
    read(spec, "reward_sample_empty", p.reward_sample_empty);
    read(spec, "horizon", p.horizon);
    read(spec, "discount", p.discount);
    read(spec, "seed", p.seed);
    auto model = std::make_shared<const domains::FvrsModel>(p);
    if (p.n <= 3 && p.k <= 2)
      domain.explicit_model = std::make_shared<const DiscretePOMDP>(model->explicit_model());
    domain.model = std::move(model);
    domain.horizon = p.horizon;
    domain.discount = p.discount;
  } else {
    throw std::invalid_argument("unknown domain '" + name + "'");
  }
  return domain;
}

PlannerConfig planner_from_json(const json& doc, PlannerConfig cfg) {
  reject_unknown(doc,
                 {"label", "algorithm", "c", "queries", "horizon", "discount", "bonus",
                  "bonus_by_depth", "kappa", "kappa_schedule", "kappa_max", "c_kappa", "ucb_c",
                  "entropy_weight", "voi_bonus", "voi_actions", "rollout", "seed"},
                 "planner");
  if (auto it = doc.find("algorithm"); it != doc.end())
    cfg.algorithm = algorithm_from_string(it->get<std::string>());
  if (auto it = doc.find("c"); it != doc.end()) {
    const double c = it->get<double>();
    cfg.bonus.beta = std::pow(c, cfg.bonus.xi);
    cfg.ucb_c = c;
  }
  read(doc, "queries", cfg.queries);
  read(doc, "horizon", cfg.horizon);
  read(doc, "discount", cfg.discount);
  if (auto it = doc.find("bonus"); it != doc.end()) cfg.bonus = bonus_from_json(*it, cfg.bonus);
  if (auto it = doc.find("bonus_by_depth"); it != doc.end()) {
    cfg.bonus_by_depth.clear();
    for (const auto& b : *it) cfg.bonus_by_depth.push_back(bonus_from_json(b, cfg.bonus));
  }
  read(doc, "kappa", cfg.kappa);
  if (auto it = doc.find("kappa_schedule"); it != doc.end())
    cfg.kappa_schedule = kappa_schedule_from_string(it->get<std::string>());
  read(doc, "kappa_max", cfg.kappa_max);
  read(doc, "c_kappa", cfg.c_kappa);
  read(doc, "ucb_c", cfg.ucb_c);
  read(doc, "entropy_weight", cfg.entropy_weight);
  if (auto it = doc.find("voi_bonus"); it != doc.end()) {
    const auto v = it->get<std::string>();
    if (v == "polynomial") cfg.voi_bonus = BonusKind::kPolynomial;
    else if (v == "ucb1") cfg.voi_bonus = BonusKind::kUcb1;
    else throw std::invalid_argument("unknown voi_bonus '" + v + "'");
  }
  if (auto it = doc.find("voi_actions"); it != doc.end()) {
    const auto v = it->get<std::string>();
    if (v == "augmented") cfg.voi_actions = VoiActionSet::kAugmented;
    else if (v == "closed_loop_only") cfg.voi_actions = VoiActionSet::kClosedLoopOnly;
    else throw std::invalid_argument("unknown voi_actions '" + v + "'");
  }
  if (auto it = doc.find("rollout"); it != doc.end() && it->get<std::string>() != "random")
    throw std::invalid_argument("only the random rollout is available");
  read(doc, "seed", cfg.seed);
  cfg.validate();
  return cfg;
}

json to_json(const PlannerConfig& cfg) {
  json by_depth = json::array();
  for (const auto& b : cfg.bonus_by_depth) by_depth.push_back(bonus_to_json(b));
  return {{"algorithm", to_string(cfg.algorithm)},
          {"queries", cfg.queries},
          {"horizon", cfg.horizon},
          {"discount", cfg.discount},
          {"bonus", bonus_to_json(cfg.bonus)},
          {"bonus_by_depth", by_depth},
          {"kappa", cfg.kappa},
          {"kappa_schedule", to_string(cfg.kappa_schedule)},
          {"kappa_max", cfg.kappa_max},
          {"c_kappa", cfg.c_kappa},
          {"ucb_c", cfg.ucb_c},
          {"entropy_weight", cfg.entropy_weight},
          {"voi_bonus", cfg.voi_bonus == BonusKind::kUcb1 ? "ucb1" : "polynomial"},
          {"voi_actions",
           cfg.voi_actions == VoiActionSet::kAugmented ? "augmented" : "closed_loop_only"},
          {"rollout", "random"},
          {"seed", cfg.seed}};
}

ExperimentConfig experiment_from_json(const json& doc) {
  reject_unknown(doc,
                 {"domain", "algorithms", "budgets", "trials", "particles", "seed", "output",
                  "execution_filter", "record_wall_time"},
                 "experiment");
  ExperimentConfig cfg;
  cfg.domain = doc.at("domain");
  const Domain domain = make_domain(cfg.domain);

  PlannerConfig defaults;
  defaults.horizon = domain.horizon;
  defaults.discount = domain.discount;
  for (const auto& entry : doc.at("algorithms")) {
    AlgorithmEntry a;
    a.planner = planner_from_json(entry, defaults);
    a.label = entry.contains("label") ? entry.at("label").get<std::string>()
                                      : std::string(to_string(a.planner.algorithm));
    cfg.algorithms.push_back(std::move(a));
  }
  if (cfg.algorithms.empty()) throw std::invalid_argument("experiment needs at least one algorithm");

  cfg.budgets = doc.at("budgets").get<std::vector<int>>();
  if (cfg.budgets.empty()) throw std::invalid_argument("budgets must be nonempty");
  for (int b : cfg.budgets)
    if (b < 1) throw std::invalid_argument("budgets must be positive");

  read(doc, "trials", cfg.trials);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  read(doc, "particles", cfg.particles);
  if (cfg.particles < 1) throw std::invalid_argument("particles must be at least 1");
  read(doc, "seed", cfg.seed);
  read(doc, "output", cfg.output);
  read(doc, "record_wall_time", cfg.record_wall_time);
  if (auto it = doc.find("execution_filter"); it != doc.end()) {
    const auto v = it->get<std::string>();
    if (v == "closed") cfg.execution_filter = ExecutionFilter::kClosed;
    else if (v == "open") cfg.execution_filter = ExecutionFilter::kOpen;
    else throw std::invalid_argument("execution_filter must be 'closed' or 'open'");
  }
  return cfg;
}

ExperimentConfig load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return experiment_from_json(json::parse(in));
}

}  // namespace voi::harness
