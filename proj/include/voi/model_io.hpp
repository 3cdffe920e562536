#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "voi/pomdp.hpp"

namespace voi {

/// Reads an explicit model from its JSON document form:
///   {"num_states", "num_actions", "num_observations",
///    "transition": [s][a][s'], "reward": [s][a], "observation": [s'][a][o],
///    "horizon", "discount", "initial_belief": [s], "r_max"}
/// Shapes are checked; table invariants are left to validate_model().
DiscretePOMDP model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const DiscretePOMDP& model);

DiscretePOMDP load_model(const std::filesystem::path& path);

}  // namespace voi
