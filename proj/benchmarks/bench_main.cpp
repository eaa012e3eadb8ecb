#include <benchmark/benchmark.h>

#include <vector>

#include "avgproc/avg_sim.hpp"
#include "avgproc/bipartite_exact.hpp"
#include "avgproc/ehrenfest.hpp"
#include "avgproc/numerics.hpp"

using namespace avgproc;

// Events per second of the simulator; one unit of time on K_{m,m} rings m^2 edges.
static void BM_SimulateBipartite(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  const Graph g = complete_bipartite(m, m);
  Rng rng(1);
  MassConfig eta = dirac(2 * m, 0);
  for (auto _ : state) {
    advance(g, eta, 1.0, rng);
    benchmark::DoNotOptimize(eta.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m * m));
}
BENCHMARK(BM_SimulateBipartite)->Arg(16)->Arg(256);

static void BM_SimulateHypercube(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Graph g = hypercube(d);
  Rng rng(2);
  MassConfig eta = dirac(g.n(), 0);
  for (auto _ : state) {
    advance(g, eta, 1.0, rng);
    benchmark::DoNotOptimize(eta.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_SimulateHypercube)->Arg(10)->Arg(14);

static void BM_ExactL2(benchmark::State& state) {
  double a = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bipartite::exact_l2(300000, 1000000, Part::C2, 1e-4 + a));
    a += 1e-12;
  }
}
BENCHMARK(BM_ExactL2);

static void BM_HypercubeExactCold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ehrenfest::SpectrumCache::global().clear();
    benchmark::DoNotOptimize(ehrenfest::hypercube_avg_l2_exact(d, 3.8).log_value);
  }
}
BENCHMARK(BM_HypercubeExactCold)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_HypercubeExactWarm(benchmark::State& state) {
  ehrenfest::hypercube_avg_l2_exact(2000, 1.0);
  double t = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehrenfest::hypercube_avg_l2_exact(2000, t).log_value);
    t += 1e-9;
  }
}
BENCHMARK(BM_HypercubeExactWarm);

static void BM_TridiagonalEigenvalues(benchmark::State& state) {
  const auto tri = ehrenfest::symmetrized_generator(ehrenfest::build_s(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(numerics::tridiagonal_eigenvalues(tri.diag, tri.off));
}
BENCHMARK(BM_TridiagonalEigenvalues)->Arg(100)->Arg(2000)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
