#include <doctest.h>

#include "support.hpp"
#include "voi/generative.hpp"
#include "voi/voi_transform.hpp"

using namespace voi;
using support::belief;
namespace tiger = voi::domains::tiger;

TEST_SUITE("voi-transform") {

TEST_CASE("augmented sizes") {
  const auto m = support::tiger_model();
  const auto v = augment(m);
  CHECK(v.num_actions() == 6);
  CHECK(v.num_observations() == 3);
  CHECK(v.null_observation() == 2);
}

TEST_CASE("action layout puts open-loop first") {
  CHECK(encode_action({2, Mode::kOpenLoop}, 3) == 2);
  CHECK(encode_action({0, Mode::kClosedLoop}, 3) == 3);
  for (int i = 0; i < 6; ++i) CHECK(encode_action(decode_action(i, 3), 3) == i);
}

TEST_CASE("augmented tables") {
  const auto m = support::tiger_model();
  const auto v = augment(m);
  const int null_o = v.null_observation();
  for (int a = 0; a < m.num_actions(); ++a) {
    const int ol = v.index({a, Mode::kOpenLoop}), cl = v.index({a, Mode::kClosedLoop});
    for (int s = 0; s < m.num_states(); ++s) {
      CHECK(v.reward(s, ol) == m.reward()(s, a));
      CHECK(v.reward(s, cl) == m.reward()(s, a));
      CHECK(v.observation(s, ol, null_o) == 1.0);
      CHECK(v.observation(s, cl, null_o) == 0.0);
      for (int o = 0; o < m.num_observations(); ++o) {
        CHECK(v.observation(s, ol, o) == 0.0);
        CHECK(v.observation(s, cl, o) == m.observation(a)(s, o));
      }
      for (int sp = 0; sp < m.num_states(); ++sp) {
        CHECK(v.transition(s, ol, sp) == m.transition(a)(s, sp));
        CHECK(v.transition(s, cl, sp) == m.transition(a)(s, sp));
      }
    }
  }
}

TEST_CASE("augmented step") {
  TabularGenerativeModel g(support::tiger_model());
  const Observation null_o = null_observation(g.observation_count());

  SUBCASE("open-loop always yields the null observation") {
    Rng rng(1);
    for (int i = 0; i < 1000; ++i)
      CHECK(augmented_step(g, i % 2, {i % 3, Mode::kOpenLoop}, rng).observation == null_o);
  }
  SUBCASE("closed-loop observations follow Z") {
    Rng rng(2);
    const int n = 100000;
    int left = 0;
    for (int i = 0; i < n; ++i) {
      const auto step = augmented_step(g, tiger::kTigerLeft, {tiger::kListen, Mode::kClosedLoop}, rng);
      REQUIRE(step.observation != null_o);
      left += step.observation == tiger::kHearLeft;
    }
    CHECK(std::abs(left / double(n) - 0.85) <= 3 * std::sqrt(0.85 * 0.15 / n));
  }
  SUBCASE("same stream gives the same next state and reward in both modes") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      for (Action a = 0; a < 3; ++a) {
        Rng r1(seed), r2(seed);
        const auto ol = augmented_step(g, 0, {a, Mode::kOpenLoop}, r1);
        const auto cl = augmented_step(g, 0, {a, Mode::kClosedLoop}, r2);
        CHECK(ol.next == cl.next);
        CHECK(ol.reward == cl.reward);
      }
    }
  }
}

TEST_CASE("next-state law agrees across modes (chi-square)") {
  TabularGenerativeModel g(support::tiger_model());
  const int n = 100000;
  for (Action a : {tiger::kListen, tiger::kOpenLeft}) {
    std::array<int, 2> ol{}, cl{};
    Rng r1(10 + a), r2(20 + a);
    for (int i = 0; i < n; ++i) {
      ++ol[static_cast<std::size_t>(augmented_step(g, 0, {a, Mode::kOpenLoop}, r1).next)];
      ++cl[static_cast<std::size_t>(augmented_step(g, 0, {a, Mode::kClosedLoop}, r2).next)];
    }
    // 2x2 homogeneity test, one degree of freedom; 6.635 is the 1% critical value.
    double chi2 = 0;
    for (std::size_t s = 0; s < 2; ++s) {
      const double pooled = (ol[s] + cl[s]) / (2.0 * n);
      const double expected = pooled * n;
      if (expected == 0) continue;
      chi2 += (ol[s] - expected) * (ol[s] - expected) / expected;
      chi2 += (cl[s] - expected) * (cl[s] - expected) / expected;
    }
    CHECK(chi2 < 6.635);
  }
}

TEST_CASE("augmented belief update") {
  const auto m = support::tiger_model();
  const auto b = belief({0.3, 0.7});
  const Observation null_o = null_observation(m.num_observations());
  CHECK(augmented_belief_update(m, b, {tiger::kListen, Mode::kOpenLoop}, null_o) ==
        belief_update_open(m, b, tiger::kListen));
  CHECK(augmented_belief_update(m, b, {tiger::kListen, Mode::kClosedLoop}, tiger::kHearRight) ==
        belief_update_closed(m, b, tiger::kListen, tiger::kHearRight));
  CHECK_THROWS_AS(augmented_belief_update(m, b, {tiger::kListen, Mode::kOpenLoop}, tiger::kHearLeft),
                  ModeObservationMismatch);
  CHECK_THROWS_AS(augmented_belief_update(m, b, {tiger::kListen, Mode::kClosedLoop}, null_o),
                  ModeObservationMismatch);
}

TEST_CASE("restriction to closed-loop actions recovers the base model") {
  const auto m = support::tiger_model();
  const auto v = augment(m);
  const auto b = belief({0.4, 0.6});
  for (int a = 0; a < m.num_actions(); ++a)
    for (int o = 0; o < m.num_observations(); ++o)
      CHECK(belief_update_closed(v, b, v.index({a, Mode::kClosedLoop}), o) ==
            belief_update_closed(m, b, a, o));
}

}
