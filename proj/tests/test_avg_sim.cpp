#include <cmath>

#include "avgproc/avg_sim.hpp"
#include "avgproc/ehrenfest.hpp"
#include "avgproc/errors.hpp"
#include "doctest.h"

using namespace avgproc;

TEST_SUITE("avg_sim") {
  TEST_CASE("pair update examples") {
    CHECK(pair_update({1.0, 0.0}, 0, 1) == MassConfig{0.5, 0.5});
    CHECK(pair_update({0.5, 0.5}, 1, 0) == MassConfig{0.5, 0.5});
    CHECK(pair_update({0.25, 0.75, 0.0}, 1, 2) == MassConfig{0.25, 0.375, 0.375});
    CHECK_THROWS_AS(pair_update({1.0, 0.0}, 1, 1), ParameterError);
  }

  TEST_CASE("lp distance examples") {
    CHECK(lp_distance(uniform_mass(4), 1).norm == 0.0);
    CHECK(lp_distance(dirac(4, 2), 1).norm == doctest::Approx(1.5));
    CHECK(lp_distance(dirac(4, 2), 2).power == doctest::Approx(3.0));
    CHECK(lp_distance(dirac(4, 2), 2).norm == doctest::Approx(std::sqrt(3.0)));
    CHECK_THROWS(lp_distance(dirac(4, 2), 3));
  }

  TEST_CASE("simulate at t = 0 returns the input") {
    Rng rng(1);
    const Graph g = hypercube(3);
    const MassConfig xi = dirac(8, 3);
    CHECK(simulate(g, xi, 0.0, rng) == xi);
  }

  TEST_CASE("single edge equilibrates after one ring") {
    Rng rng(2);
    const MassConfig out = simulate(complete_bipartite(1, 1), {1.0, 0.0}, 50.0, rng);
    CHECK(out == MassConfig{0.5, 0.5});
  }

  TEST_CASE("K2: fraction of untouched runs matches e^-t") {
    const Graph g = complete_bipartite(1, 1);
    MonteCarlo mc{10000, 11, 1};
    const double t = 10.0;
    auto hits = run_replicas<double>(mc, [&](std::size_t, Rng& rng) {
      return simulate(g, {1.0, 0.0}, t, rng)[0] == 1.0 ? 1.0 : 0.0;
    });
    const Estimate e = estimate(hits);
    const double p = std::exp(-t);
    const double se = std::sqrt(p * (1 - p) / 10000.0);
    CHECK(std::abs(e.mean - p) <= 3 * se + 1.0 / 10000.0);
  }

  TEST_CASE("mean_lp: Dirac at t = 0 is exactly n - 1") {
    const Estimate e = mean_lp(complete_graph(4), dirac(4, 0), 0.0, 2, {100, 3, 1});
    CHECK(e.mean == 3.0);
    CHECK(e.std_error == 0.0);
    CHECK_THROWS(mean_lp(complete_graph(4), dirac(4, 0), 0.0, 2, {1, 3, 1}));
  }

  TEST_CASE("mean_lp on one edge is e^-t") {
    const Estimate e = mean_lp(complete_bipartite(1, 1), {1.0, 0.0}, 1.0, 2, {20000, 5, 1});
    CHECK(within_sigma(std::exp(-1.0), e, 3.0));
  }

  TEST_CASE("hypercube d = 8 agrees with the exact Ehrenfest value") {
    const double t = 0.5 * std::log(8.0);
    const Estimate e = mean_lp(hypercube(8), dirac(256, 0), t, 2, {4000, 21, 2});
    CHECK(within_sigma(ehrenfest::hypercube_avg_l2_exact(8, t).value, e, 3.0));
  }

  TEST_CASE("mass is conserved") {
    Rng rng(8);
    const Graph g = complete_bipartite(7, 13);
    MassConfig eta = dirac(20, 0);
    for (int k = 0; k < 50; ++k) {
      advance(g, eta, 0.1, rng);
      double s = 0.0;
      for (double v : eta) {
        CHECK(v >= 0.0);
        s += v;
      }
      CHECK(std::abs(s - 1.0) < 1e-9);
    }
  }

  TEST_CASE("mean_lp is nonincreasing in t") {
    const std::vector<double> times{0.2, 0.6, 1.2};
    const auto est = mean_lp_path(hypercube(5), dirac(32, 0), times, 2, {3000, 13, 1});
    for (std::size_t i = 1; i < est.size(); ++i) {
      const double slack = 3.0 * std::hypot(est[i].std_error, est[i - 1].std_error);
      CHECK(est[i].mean <= est[i - 1].mean + slack);
    }
  }

  TEST_CASE("results do not depend on the number of threads") {
    const std::vector<double> times{0.1, 0.5};
    const auto a = mean_lp_path(complete_bipartite(3, 9), dirac(12, 5), times, 1, {500, 77, 1});
    const auto b = mean_lp_path(complete_bipartite(3, 9), dirac(12, 5), times, 1, {500, 77, 4});
    for (std::size_t i = 0; i < times.size(); ++i) {
      CHECK(a[i].mean == b[i].mean);
      CHECK(a[i].std_error == b[i].std_error);
    }
  }
}
