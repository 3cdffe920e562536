#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "voi/generative.hpp"
#include "voi/particle_filter.hpp"

using namespace voi;
using support::belief;
namespace tiger = voi::domains::tiger;
using support::Matrix;

TEST_SUITE("belief") {

TEST_CASE("empty particle set is rejected") {
  CHECK_THROWS_AS(ParticleBelief({}), std::invalid_argument);
}

TEST_CASE("revealing observation collapses every particle") {
  TabularGenerativeModel g(support::revealing());
  Rng rng(1);
  const ParticleBelief b({0, 1, 1, 0, 1});
  const auto out = sir_update(b, g, 0, 1, rng);
  CHECK(out.count() == 5);
  for (State s : out.particles()) CHECK(s == 1);
}

TEST_CASE("equal weights keep frequencies") {
  // Uninformative observation: every particle gets weight 1.
  TabularGenerativeModel g(support::tiger_model(0.95, 0.5));
  Rng rng(2);
  std::vector<State> init(10000);
  for (std::size_t i = 0; i < init.size(); ++i) init[i] = i < 3000 ? 0 : 1;
  const auto out = sir_update(ParticleBelief(init), g, tiger::kListen, tiger::kHearLeft, rng);
  const double frac = to_dense(out, 2)(0);
  // Systematic resampling with equal weights reproduces counts up to rounding.
  CHECK(frac == doctest::Approx(0.3).epsilon(1e-3));
}

TEST_CASE("tiger listen posterior from particles") {
  TabularGenerativeModel g(support::tiger_model());
  Rng rng(3);
  const auto b = ParticleBelief::from_initial(g, 10000, rng);
  const auto out = sir_update(b, g, tiger::kListen, tiger::kHearLeft, rng);
  CHECK(out.count() == 10000);
  CHECK(std::abs(to_dense(out, 2)(0) - 0.85) <= 0.02);
}

TEST_CASE("depletion throws") {
  TabularGenerativeModel g(support::revealing());
  Rng rng(4);
  CHECK_THROWS_AS(sir_update(ParticleBelief({0, 0, 0}), g, 0, 1, rng), ParticleDepletion);
}

TEST_CASE("sample_state") {
  Rng rng(5);
  CHECK(sample_state(ParticleBelief({7}), rng) == 7);
  CHECK(sample_state(ParticleBelief(std::vector<State>(10, 3)), rng) == 3);

  std::vector<State> split(100);
  for (int i = 0; i < 100; ++i) split[static_cast<std::size_t>(i)] = i < 70 ? 0 : 1;
  const ParticleBelief b(split);
  const int n = 10000;
  int zeros = 0;
  for (int i = 0; i < n; ++i) zeros += sample_state(b, rng) == 0;
  const double se = std::sqrt(0.7 * 0.3 / n);
  CHECK(std::abs(zeros / double(n) - 0.7) <= 3 * se);
}

TEST_CASE("systematic resampling follows the weights") {
  Rng rng(6);
  const std::vector<State> states{0, 1, 2, 3};
  const std::vector<double> weights{0.1, 0.0, 0.6, 0.3};
  const auto out = systematic_resample(states, weights, 1000, rng);
  REQUIRE(out.size() == 1000);
  std::array<int, 4> counts{};
  for (State s : out) ++counts[static_cast<std::size_t>(s)];
  // Each count is within one of count * weight.
  CHECK(std::abs(counts[0] - 100) <= 1);
  CHECK(counts[1] == 0);
  CHECK(std::abs(counts[2] - 600) <= 1);
  CHECK(std::abs(counts[3] - 300) <= 1);
}

TEST_CASE("open propagation keeps the count and the dynamics") {
  TabularGenerativeModel g(support::chain(4, 1, 0.9, 3));
  Rng rng(7);
  const auto out = propagate_open(ParticleBelief({0, 1, 3}), g, 0, rng);
  CHECK(std::vector<State>(out.particles().begin(), out.particles().end()) ==
        std::vector<State>{1, 2, 3});
}

TEST_CASE("filter is deterministic for a seed") {
  TabularGenerativeModel g(support::tiger_model());
  auto run = [&] {
    Rng rng(8);
    auto b = ParticleBelief::from_initial(g, 500, rng);
    for (int i = 0; i < 3; ++i) b = sir_update(b, g, tiger::kListen, i % 2, rng);
    return b;
  };
  CHECK(run() == run());
}

TEST_CASE("three-step filtering tracks the exact posterior") {
  const auto m = support::tiger_model();
  const auto t = oracle::tables(m);
  TabularGenerativeModel g(m);
  Rng rng(9);
  for (int seq = 0; seq < 8; ++seq) {
    auto particles = ParticleBelief::from_initial(g, 10000, rng);
    oracle::Vec exact = oracle::to_vec(m.initial_belief());
    for (int k = 0; k < 3; ++k) {
      const int o = (seq >> k) & 1;
      particles = sir_update(particles, g, tiger::kListen, o, rng);
      exact = oracle::posterior(t, exact, tiger::kListen, o).first;
    }
    CHECK(oracle::total_variation(oracle::to_vec(to_dense(particles, 2)), exact) <= 0.05);
  }
}

}
