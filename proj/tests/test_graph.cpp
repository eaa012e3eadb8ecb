#include <Eigen/Dense>
#include <set>

#include "avgproc/errors.hpp"
#include "avgproc/graph.hpp"
#include "avgproc/rw_duality.hpp"
#include "doctest.h"

using namespace avgproc;

namespace {
void check_structure(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [x, y] : g.edges()) {
    CHECK(x < y);
    CHECK(y < g.n());
    CHECK(g.adjacent(x, y));
    CHECK(seen.insert({x, y}).second);
  }
  CHECK(seen.size() == g.edge_count());
  std::uint64_t deg_sum = 0;
  for (Vertex x = 0; x < g.n(); ++x) {
    deg_sum += g.degree(x);
    std::set<Vertex> nb;
    for (std::uint64_t j = 0; j < g.degree(x); ++j) {
      const Vertex y = g.neighbor(x, j);
      CHECK(y != x);
      CHECK(seen.count({std::min(x, y), std::max(x, y)}) == 1);
      nb.insert(y);
    }
    CHECK(nb.size() == g.degree(x));
  }
  CHECK(deg_sum == 2 * g.edge_count());
}

double spectral_gap(const Graph& g) {
  const auto dense = rw_generator(g).dense();
  const std::size_t n = dense.size();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = -dense(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return es.eigenvalues()(1);
}
}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("hypercube sizes") {
    CHECK(hypercube(1).n() == 2);
    CHECK(hypercube(1).edge_count() == 1);
    CHECK(hypercube(3).n() == 8);
    CHECK(hypercube(3).edge_count() == 12);
    CHECK(hypercube(10).n() == 1024);
    CHECK(hypercube(10).edge_count() == 5120);
    CHECK(hypercube(30).edge_count() == 30ULL * (1ULL << 29));
    CHECK_THROWS_AS(hypercube(0), ParameterError);
    CHECK_THROWS_AS(hypercube(31), ParameterError);
  }

  TEST_CASE("hypercube edges join words at Hamming distance 1") {
    const Graph g = hypercube(5);
    check_structure(g);
    for (const auto& [x, y] : g.edges()) CHECK(__builtin_popcount(x ^ y) == 1);
  }

  TEST_CASE("complete bipartite") {
    CHECK(complete_bipartite(1, 1).edge_count() == 1);
    CHECK(complete_bipartite(1, 4).edge_count() == 4);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK_THROWS_AS(complete_bipartite(3, 2), ParameterError);
    const Graph g = complete_bipartite(3, 7);
    check_structure(g);
    for (const auto& [x, y] : g.edges()) CHECK(g.part_of(x) != g.part_of(y));
    CHECK(g.part_of(0) == Part::C1);
    CHECK(g.part_of(3) == Part::C2);
    CHECK_THROWS_AS(hypercube(3).part_of(0), CapabilityError);
  }

  TEST_CASE("complete graph") {
    for (std::uint64_t n : {2u, 3u, 7u, 20u}) {
      const Graph g = complete_graph(n);
      CHECK(g.edge_count() == n * (n - 1) / 2);
      check_structure(g);
    }
  }

  TEST_CASE("degree statistics") {
    CHECK(degree_stats(hypercube(6)).mean == 6.0);
    for (auto deg : degree_stats(hypercube(6)).degrees) CHECK(deg == 6);
    const auto s = degree_stats(complete_bipartite(2, 5));
    CHECK(s.mean == doctest::Approx(2.0 * 2 * 5 / 7.0).epsilon(1e-15));
    CHECK(s.degrees[0] == 5);
    CHECK(s.degrees[6] == 2);
    CHECK(degree_stats(complete_graph(9)).mean == 8.0);
  }

  TEST_CASE("relaxation time equals the inverse eigensolved gap") {
    CHECK(relaxation_time(hypercube(4)) == 1.0);
    CHECK(relaxation_time(complete_bipartite(3, 9)) == doctest::Approx(2.0 / 3.0));
    CHECK(relaxation_time(complete_graph(5)) == doctest::Approx(0.4));
    for (int d = 1; d <= 6; ++d) {
      const Graph g = hypercube(d);
      CHECK(std::abs(spectral_gap(g) - 1.0 / relaxation_time(g)) < 1e-9);
    }
    for (auto [m, k] : {std::pair{1, 1}, {1, 4}, {2, 3}, {3, 7}, {5, 5}, {4, 60}}) {
      const Graph g = complete_bipartite(m, k);
      CHECK(std::abs(spectral_gap(g) - 1.0 / relaxation_time(g)) < 1e-9);
    }
    for (int n : {2, 3, 4, 5, 17, 64}) {
      const Graph g = complete_graph(n);
      CHECK(std::abs(spectral_gap(g) - 1.0 / relaxation_time(g)) < 1e-9);
    }
  }
}
