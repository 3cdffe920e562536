#include "voi/model_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace voi {
namespace {

using Matrix = DiscretePOMDP::Matrix;
using Vector = DiscretePOMDP::Vector;

const nlohmann::json& sized_array(const nlohmann::json& value, std::size_t n, const char* what) {
  if (!value.is_array() || value.size() != n)
    throw std::invalid_argument(std::string("model JSON: '") + what + "' has wrong length");
  return value;
}

}  // namespace

DiscretePOMDP model_from_json(const nlohmann::json& doc) {
  static const std::set<std::string> known = {
      "num_states", "num_actions", "num_observations", "transition", "reward",
      "observation", "horizon", "discount", "initial_belief", "r_max"};
  for (const auto& [key, _] : doc.items())
    if (!known.contains(key)) throw std::invalid_argument("model JSON: unknown key '" + key + "'");

  const auto ns = doc.at("num_states").get<int>();
  const auto na = doc.at("num_actions").get<int>();
  const auto no = doc.at("num_observations").get<int>();
  if (ns < 1 || na < 1 || no < 1) throw std::invalid_argument("model JSON: sizes must be positive");
  const auto S = static_cast<std::size_t>(ns), A = static_cast<std::size_t>(na),
             O = static_cast<std::size_t>(no);

  std::vector<Matrix> transition(A, Matrix::Zero(ns, ns));
  std::vector<Matrix> observation(A, Matrix::Zero(ns, no));
  Matrix reward(ns, na);

  const auto& t = sized_array(doc.at("transition"), S, "transition");
  const auto& z = sized_array(doc.at("observation"), S, "observation");
  const auto& r = sized_array(doc.at("reward"), S, "reward");
  for (std::size_t s = 0; s < S; ++s) {
    sized_array(t[s], A, "transition");
    sized_array(z[s], A, "observation");
    sized_array(r[s], A, "reward");
    for (std::size_t a = 0; a < A; ++a) {
      sized_array(t[s][a], S, "transition");
      sized_array(z[s][a], O, "observation");
      for (std::size_t sp = 0; sp < S; ++sp) transition[a](s, sp) = t[s][a][sp].get<double>();
      for (std::size_t o = 0; o < O; ++o) observation[a](s, o) = z[s][a][o].get<double>();
      reward(s, a) = r[s][a].get<double>();
    }
  }

  const auto& b = sized_array(doc.at("initial_belief"), S, "initial_belief");
  Vector belief(ns);
  for (std::size_t s = 0; s < S; ++s) belief(s) = b[s].get<double>();

  return DiscretePOMDP(std::move(transition), std::move(observation), std::move(reward),
                       std::move(belief), doc.at("horizon").get<int>(),
                       doc.at("discount").get<double>(), doc.at("r_max").get<double>());
}

nlohmann::json model_to_json(const DiscretePOMDP& model) {
  const int S = model.num_states(), A = model.num_actions(), O = model.num_observations();
  nlohmann::json t = nlohmann::json::array(), z = nlohmann::json::array(),
                 r = nlohmann::json::array(), b = nlohmann::json::array();
  for (int s = 0; s < S; ++s) {
    nlohmann::json ts = nlohmann::json::array(), zs = nlohmann::json::array(),
                   rs = nlohmann::json::array();
    for (int a = 0; a < A; ++a) {
      nlohmann::json row = nlohmann::json::array(), zrow = nlohmann::json::array();
      for (int sp = 0; sp < S; ++sp) row.push_back(model.transition(a)(s, sp));
      for (int o = 0; o < O; ++o) zrow.push_back(model.observation(a)(s, o));
      ts.push_back(std::move(row));
      zs.push_back(std::move(zrow));
      rs.push_back(model.reward()(s, a));
    }
    t.push_back(std::move(ts));
    z.push_back(std::move(zs));
    r.push_back(std::move(rs));
    b.push_back(model.initial_belief()(s));
  }
  return {{"num_states", S},    {"num_actions", A},           {"num_observations", O},
          {"transition", t},    {"reward", r},                {"observation", z},
          {"horizon", model.horizon()}, {"discount", model.discount()},
          {"initial_belief", b}, {"r_max", model.r_max()}};
}

DiscretePOMDP load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file " + path.string());
  return model_from_json(nlohmann::json::parse(in));
}

}  // namespace voi
