#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "support.hpp"
#include "voi/generative.hpp"
#include "voi/model_io.hpp"

using namespace voi;
using support::belief;
namespace tiger = voi::domains::tiger;
using support::Matrix;

TEST_SUITE("pomdp-core") {

TEST_CASE("tiger model is valid") {
  CHECK(validate_model(support::tiger_model()).empty());
}

TEST_CASE("validate_model reports a transition row that does not sum to one") {
  const auto tiger = support::tiger_model();
  std::vector<Matrix> t, z;
  for (int a = 0; a < 3; ++a) t.push_back(tiger.transition(a)), z.push_back(tiger.observation(a));
  t[0].row(0) << 0.6, 0.6;
  DiscretePOMDP bad(t, z, tiger.reward(), tiger.initial_belief(), 20, 0.95, tiger.r_max());
  const auto report = validate_model(bad);
  REQUIRE(report.size() == 1);
  CHECK(report[0] == "transition row (0,0) sums to 1.2");
}

TEST_CASE("validate_model reports a reward above r_max") {
  const auto tiger = support::tiger_model();
  std::vector<Matrix> t, z;
  for (int a = 0; a < 3; ++a) t.push_back(tiger.transition(a)), z.push_back(tiger.observation(a));
  Matrix r = tiger.reward();
  r(0, 0) = tiger.r_max() + 1;
  DiscretePOMDP bad(t, z, r, tiger.initial_belief(), 20, 0.95, tiger.r_max());
  const auto report = validate_model(bad);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("exceeds r_max") != std::string::npos);
}

TEST_CASE("constructor rejects mismatched shapes") {
  Matrix id = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DiscretePOMDP({id}, {id, id}, Matrix::Zero(2, 1), belief({1, 0}), 1, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(DiscretePOMDP({id}, {id}, Matrix::Zero(3, 1), belief({1, 0}), 1, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("closed update after listening") {
  const auto m = support::tiger_model();
  const auto post = belief_update_closed(m, belief({0.5, 0.5}), tiger::kListen, tiger::kHearLeft);
  CHECK(post(0) == doctest::Approx(0.5 * 0.85 / (0.5 * 0.85 + 0.5 * 0.15)).epsilon(1e-12));
  CHECK(post(1) == doctest::Approx(0.15).epsilon(1e-12));
}

TEST_CASE("closed update with a revealing observation is one-hot") {
  const auto m = support::revealing();
  const auto post = belief_update_closed(m, belief({0.3, 0.7}), 0, 1);
  CHECK(post(0) == 0.0);
  CHECK(post(1) == 1.0);
}

TEST_CASE("closed update from a certain state stays certain") {
  const auto m = support::chain(3, 1, 0.9, 3);
  const auto post = belief_update_closed(m, belief({1, 0, 0}), 0, 0);
  CHECK(post(1) == 1.0);
}

TEST_CASE("impossible observation throws") {
  const auto m = support::revealing();
  CHECK_THROWS_AS(belief_update_closed(m, belief({1, 0}), 0, 1), ZeroProbabilityObservation);
}

TEST_CASE("open update") {
  SUBCASE("identity dynamics leave the belief unchanged") {
    const auto b = belief({0.3, 0.7});
    CHECK(belief_update_open(support::revealing(), b, 0).isApprox(b, 1e-15));
  }
  SUBCASE("doubly stochastic dynamics keep the uniform belief") {
    Matrix t(3, 3);
    t << 0.2, 0.3, 0.5, 0.5, 0.2, 0.3, 0.3, 0.5, 0.2;
    DiscretePOMDP m({t}, {Matrix::Ones(3, 1)}, Matrix::Zero(3, 1), belief({1, 0, 0}), 1, 1, 1);
    const auto out = belief_update_open(m, belief({1 / 3.0, 1 / 3.0, 1 / 3.0}), 0);
    for (int i = 0; i < 3; ++i) CHECK(out(i) == doctest::Approx(1 / 3.0).epsilon(1e-12));
  }
  SUBCASE("tiger listen keeps the uniform belief") {
    const auto out = belief_update_open(support::tiger_model(), belief({0.5, 0.5}), tiger::kListen);
    CHECK(out(0) == doctest::Approx(0.5));
  }
}

TEST_CASE("observation likelihood") {
  const auto m = support::tiger_model();
  CHECK(observation_likelihood(m, belief({0.5, 0.5}), tiger::kListen, tiger::kHearLeft) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(observation_likelihood(m, belief({0.85, 0.15}), tiger::kListen, tiger::kHearLeft) ==
        doctest::Approx(0.85 * 0.85 + 0.15 * 0.15).epsilon(1e-12));
  const auto r = support::revealing();
  CHECK(observation_likelihood(r, belief({0, 1}), 0, 1) == 1.0);
  CHECK(observation_likelihood(r, belief({0, 1}), 0, 0) == 0.0);
}

TEST_CASE("expected reward") {
  const auto m = support::tiger_model();
  CHECK(expected_reward(m, belief({0.5, 0.5}), tiger::kOpenLeft) == doctest::Approx(-45));
  CHECK(expected_reward(m, belief({0, 1}), tiger::kOpenLeft) == m.reward()(1, tiger::kOpenLeft));
  const auto c = support::chain(3, 2.5, 0.9, 3);
  CHECK(expected_reward(c, belief({0.2, 0.5, 0.3}), 0) == doctest::Approx(2.5));
}

TEST_CASE("Bayes consistency and linearity over a belief sweep") {
  const auto m = support::tiger_model(0.95, 0.7);
  const auto t = oracle::tables(m);
  for (int i = 0; i <= 20; ++i) {
    const auto b = belief({i / 20.0, 1 - i / 20.0});
    for (int a = 0; a < m.num_actions(); ++a) {
      DenseBelief mix = DenseBelief::Zero(2);
      double total = 0;
      for (int o = 0; o < m.num_observations(); ++o) {
        const double p = observation_likelihood(m, b, a, o);
        total += p;
        if (p < 1e-12) continue;
        const auto post = belief_update_closed(m, b, a, o);
        CHECK(is_valid_belief(post));
        mix += p * post;
        // Independent posterior.
        const auto [ref, ref_p] = oracle::posterior(t, oracle::to_vec(b), a, o);
        CHECK(ref_p == doctest::Approx(p).epsilon(1e-12));
        for (int s = 0; s < 2; ++s) CHECK(post(s) == doctest::Approx(ref[s]).epsilon(1e-12));
      }
      CHECK(total == doctest::Approx(1).epsilon(1e-9));
      CHECK((mix - belief_update_open(m, b, a)).cwiseAbs().maxCoeff() <= 1e-9);

      const auto b2 = belief({0.9, 0.1});
      const double alpha = 0.3;
      const DenseBelief blend = alpha * b + (1 - alpha) * b2;
      CHECK(std::abs(expected_reward(m, blend, a) - (alpha * expected_reward(m, b, a) +
                                                     (1 - alpha) * expected_reward(m, b2, a))) <=
            1e-9);
    }
  }
}

TEST_CASE("tabular generative model matches the tables") {
  // Noisy three-state model so that every (s', o) cell is exercised.
  Matrix t(3, 3), z(3, 2);
  t << 0.1, 0.6, 0.3, 0.5, 0.25, 0.25, 0.0, 0.2, 0.8;
  z << 0.9, 0.1, 0.4, 0.6, 0.25, 0.75;
  DiscretePOMDP m({t}, {z}, Matrix::Zero(3, 1), belief({1, 0, 0}), 1, 1, 1);
  TabularGenerativeModel g(m);
  Rng rng(11);
  const int n = 100000;
  for (State s = 0; s < 3; ++s) {
    std::map<std::pair<int, int>, int> counts;
    for (int i = 0; i < n; ++i) {
      const auto step = g.step(s, 0, rng);
      ++counts[{step.next, step.observation}];
    }
    for (int sp = 0; sp < 3; ++sp)
      for (int o = 0; o < 2; ++o) {
        const double p = t(s, sp) * z(sp, o);
        const double freq = counts[{sp, o}] / static_cast<double>(n);
        const double se = std::sqrt(p * (1 - p) / n);
        CHECK(std::abs(freq - p) <= 3 * se + 1e-12);
      }
  }
  CHECK(g.observation_weight(1, 0, 1) == z(1, 1));
}

TEST_CASE("generative sampling is reproducible for a seed") {
  TabularGenerativeModel g(support::tiger_model());
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = g.step(i % 2, i % 3, a);
    const auto y = g.step(i % 2, i % 3, b);
    CHECK(x.next == y.next);
    CHECK(x.observation == y.observation);
  }
}

TEST_CASE("model JSON round trip and schema checks") {
  const auto m = support::tiger_model();
  const auto doc = model_to_json(m);
  CHECK(doc.at("transition").size() == 2);           // [s]
  CHECK(doc.at("transition")[0].size() == 3);        // [s][a]
  CHECK(doc.at("observation")[0][0].size() == 2);    // [s'][a][o]
  const auto back = model_from_json(doc);
  CHECK(model_to_json(back) == doc);
  auto bad = doc;
  bad["extra"] = 1;
  CHECK_THROWS_AS(model_from_json(bad), std::invalid_argument);
}

}
