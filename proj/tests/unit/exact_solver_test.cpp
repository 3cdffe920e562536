#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "voi/domains/field_vision_rock_sample.hpp"
#include "voi/exact_solver.hpp"

using namespace voi;
using support::belief;
namespace tiger = voi::domains::tiger;
using support::Matrix;

namespace {

const std::vector<double> kKappas{0, 0.05, 0.1, 0.2, 0.3, 1};

}  // namespace

TEST_SUITE("exact-solver") {

TEST_CASE("depth zero is worth nothing") {
  const auto m = support::tiger_model();
  const auto b = m.initial_belief();
  CHECK(exact_value(m, b, 0) == 0);
  CHECK(exact_value_ol(m, b, 0) == 0);
  CHECK(exact_value_adaptive(m, b, 0, 0.3).value == 0);
  CHECK(exact_value_voipomdp(m, b, 0, 0.3) == 0);
}

TEST_CASE("tiger one step prefers listening") {
  const auto m = support::tiger_model();
  CHECK(exact_value(m, m.initial_belief(), 1) == doctest::Approx(-1));
  const auto q = ExactSolver<DiscretePOMDP>(m).optimal_q(m.initial_belief(), 1);
  CHECK(q[0] == doctest::Approx(-1));
  CHECK(q[1] == doctest::Approx(-45));
  CHECK(q[2] == doctest::Approx(-45));
}

TEST_CASE("constant reward chain without discount sums to c * d") {
  const auto m = support::chain(3, 2.5, 1.0, 10);
  for (int d = 0; d <= 6; ++d) CHECK(exact_value(m, m.initial_belief(), d) == doctest::Approx(2.5 * d));
}

TEST_CASE("library values agree with the reference recursion") {
  for (double gamma : {0.9, 0.95, 1.0}) {
    const auto m = support::tiger_model(gamma);
    const auto t = oracle::tables(m);
    for (const auto& b : support::tiger_grid()) {
      const auto v = oracle::to_vec(b);
      for (int d = 1; d <= 4; ++d) {
        ExactSolver<DiscretePOMDP> solver(m);
        CHECK(solver.optimal(b, d) == doctest::Approx(oracle::v_star(t, v, d)).epsilon(1e-12));
        CHECK(exact_value_cl(m, b, d) == solver.optimal(b, d));
        CHECK(solver.open_loop(b, d) == doctest::Approx(oracle::v_open(t, v, d)).epsilon(1e-12));
        for (double kappa : kKappas)
          CHECK(solver.adaptive(b, d, kappa).value ==
                doctest::Approx(oracle::v_adaptive(t, v, d, kappa)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("revealing observations open a strict Jensen gap on tiger") {
  const auto m = support::tiger_model(0.95, 1.0);
  const auto b = m.initial_belief();
  CHECK(exact_value_ol(m, b, 2) < exact_value(m, b, 2) - 1);
}

TEST_CASE("uninformative observations close the gap") {
  const auto m = support::tiger_model(0.95, 0.5);
  for (const auto& b : support::tiger_grid())
    for (int d = 1; d <= 4; ++d) {
      CHECK(std::abs(simple_voi(m, b, d)) <= 1e-9);
      CHECK(std::abs(exact_value_ol(m, b, d) - exact_value(m, b, d)) <= 1e-9);
    }
}

TEST_CASE("adaptive backup") {
  const auto m = support::tiger_model();
  SUBCASE("depth one equals the optimum for any kappa") {
    for (const auto& b : support::tiger_grid())
      for (double kappa : kKappas)
        CHECK(exact_value_adaptive(m, b, 1, kappa).value == doctest::Approx(exact_value(m, b, 1)));
  }
  SUBCASE("zero kappa recovers the optimum") {
    for (const auto& b : support::tiger_grid())
      for (int d = 1; d <= 4; ++d)
        CHECK(std::abs(exact_value_adaptive(m, b, d, 0).value - exact_value(m, b, d)) <= 1e-12);
  }
  SUBCASE("result fields are consistent with the mode rule") {
    for (const auto& b : support::tiger_grid())
      for (double kappa : kKappas) {
        const auto r = exact_value_adaptive(m, b, 3, kappa);
        const bool ol = r.ol_value >= r.cl_value - kappa * std::abs(r.cl_value);
        CHECK((r.chosen_mode == Mode::kOpenLoop) == ol);
        CHECK(r.value == (ol ? r.ol_value : r.cl_value));
        CHECK(adaptive_voi(m, b, 3, kappa) == doctest::Approx(r.cl_value - r.ol_value));
      }
  }
  SUBCASE("kappa outside [0, 1] is rejected") {
    CHECK_THROWS_AS(exact_value_adaptive(m, m.initial_belief(), 2, 1.5), std::invalid_argument);
  }
}

TEST_CASE("kappa one on a nonnegative model is the open-loop value") {
  domains::FvrsParams p;
  p.n = 3, p.k = 2, p.reward_bad = 0;
  const auto m = domains::FvrsModel(p).explicit_model();
  REQUIRE((m.reward().array() >= 0).all());
  for (int d = 1; d <= 3; ++d) {
    const auto r = exact_value_adaptive(m, m.initial_belief(), d, 1.0);
    CHECK(r.chosen_mode == Mode::kOpenLoop);
    CHECK(r.value == doctest::Approx(exact_value_ol(m, m.initial_belief(), d)).epsilon(1e-12));
  }
}

TEST_CASE("VOI-POMDP value matches the adaptive value") {
  const auto m = support::tiger_model();
  for (const auto& b : support::tiger_grid())
    for (int d = 1; d <= 4; ++d)
      for (double kappa : kKappas) {
        CHECK(std::abs(exact_value_voipomdp(m, b, d, kappa) -
                       exact_value_adaptive(m, b, d, kappa).value) <= 1e-9);
        if (kappa == 0)
          CHECK(std::abs(exact_value_voipomdp(m, b, d, 0) - exact_value(m, b, d)) <= 1e-9);
      }
}

TEST_CASE("value of information") {
  const auto m = support::tiger_model();
  const auto b = m.initial_belief();
  CHECK(simple_voi(m, b, 1) == doctest::Approx(0));
  CHECK(adaptive_voi(m, b, 1, 0.1) == doctest::Approx(0));
  // Two steps are too few for listening to pay off: one listen leaves the
  // posterior at 0.85, where opening still loses on average.
  const auto t = oracle::tables(m);
  const auto v = oracle::to_vec(b);
  CHECK(simple_voi(m, b, 2) == doctest::Approx(oracle::v_star(t, v, 2) - oracle::v_open(t, v, 2)));
  CHECK(std::abs(simple_voi(m, b, 2)) <= 1e-12);
  CHECK(simple_voi(m, b, 3) > 1);
  CHECK(simple_voi(m, b, 3) == doctest::Approx(oracle::v_star(t, v, 3) - oracle::v_open(t, v, 3)));
  for (const auto& x : support::tiger_grid())
    for (int d = 1; d <= 4; ++d) CHECK(simple_voi(m, x, d) >= -1e-9);
}

TEST_CASE("regret and its bound") {
  CHECK(regret_bound(0.1, 10, 0.9, 1) == doctest::Approx(10.0));
  CHECK(regret_bound(0, 100, 0.95, 4) == 0);
  CHECK_THROWS_AS(regret_bound(0.1, 10, 1.0, 3), std::domain_error);

  for (int d = 1; d < 10; ++d) {
    CHECK(regret_bound(0.1, 10, 0.9, d + 1) >= regret_bound(0.1, 10, 0.9, d));
    CHECK(regret_bound(0.2, 10, 0.9, d) == doctest::Approx(2 * regret_bound(0.1, 10, 0.9, d)));
  }

  for (double gamma : {0.9, 0.95}) {
    const auto m = support::tiger_model(gamma);
    for (const auto& b : support::tiger_grid())
      for (int d = 1; d <= 4; ++d) {
        CHECK(regret(m, b, d, 0) <= 1e-12);
        for (double kappa : {0.05, 0.1, 0.2})
          CHECK(regret(m, b, d, kappa) <= regret_bound(kappa, m.r_max(), gamma, d));
      }
  }
}

TEST_CASE("sandwich including the undiscounted case") {
  for (double gamma : {0.9, 0.95, 1.0}) {
    const auto m = support::tiger_model(gamma);
    for (const auto& b : support::tiger_grid())
      for (int d = 1; d <= 4; ++d) {
        ExactSolver<DiscretePOMDP> solver(m);
        const double lo = solver.open_loop(b, d), hi = solver.optimal(b, d);
        for (double kappa : kKappas) {
          const double v = solver.adaptive(b, d, kappa).value;
          CHECK(v >= lo - 1e-9);
          CHECK(v <= hi + 1e-9);
        }
      }
  }
}

TEST_CASE("node cap stops runaway expansions") {
  const auto m = support::tiger_model();
  ExactSolverOptions options;
  options.node_cap = 50;
  ExactSolver<DiscretePOMDP> solver(m, options);
  CHECK_THROWS_AS(solver.optimal(m.initial_belief(), 6), ExpansionBudgetExceeded);
  CHECK_NOTHROW(solver.optimal(m.initial_belief(), 1));
}

TEST_CASE("inverted mode rule breaks the zero-kappa identity") {
  const auto m = support::tiger_model();
  ExactSolverOptions options;
  options.invert_mode_rule = true;
  CHECK(regret(m, m.initial_belief(), 3, 0.0, options) > 1e-6);
}

TEST_CASE("single precision models") {
  const auto m = support::tiger_model();
  std::vector<Eigen::MatrixXf> t, z;
  for (int a = 0; a < 3; ++a) {
    t.push_back(m.transition(a).cast<float>());
    z.push_back(m.observation(a).cast<float>());
  }
  DiscretePomdp<float> mf(t, z, m.reward().cast<float>(), m.initial_belief().cast<float>(), 20,
                          0.95f, 100.0f);
  const Eigen::VectorXf b = mf.initial_belief();
  CHECK(static_cast<double>(exact_value(mf, b, 3)) ==
        doctest::Approx(exact_value(m, m.initial_belief(), 3)).epsilon(1e-5));
  CHECK(static_cast<double>(exact_value_adaptive(mf, b, 3, 0.1f).value) ==
        doctest::Approx(exact_value_adaptive(m, m.initial_belief(), 3, 0.1).value).epsilon(1e-5));
}

}
