#include <cmath>

#include "avgproc/chunk_process.hpp"
#include "avgproc/errors.hpp"
#include "doctest.h"

using namespace avgproc;

TEST_SUITE("chunk") {
  TEST_CASE("chunk exponent") {
    CHECK(chunk_exponent(1024) == 8);
    CHECK(chunk_exponent(4096) == 9);
  }

  TEST_CASE("initial state") {
    const Graph g = complete_bipartite(4, 1020);
    Rng rng(1);
    const ChunkState s = chunk_simulate(g, 7, 0.0, rng);
    CHECK(s.H == 8);
    CHECK(s.position.size() == 256);
    for (std::size_t u = 0; u < s.position.size(); ++u) {
      CHECK(s.position[u] == 7);
      CHECK(s.alpha[u] == 0);
      CHECK(s.beta[u] == 0);
    }
    const auto st = chunk_alive_stats(g, 7, 0.0, 1.0, {10, 1, 1});
    CHECK(st.alive.mean == 1.0);
    CHECK(st.alpha_high.mean == 0.0);
  }

  TEST_CASE("requires a bipartite graph") {
    CHECK_THROWS_AS(ChunkProcess(hypercube(10), 0), CapabilityError);
  }

  TEST_CASE("split, beta and alpha events follow the rules") {
    const Graph g = complete_bipartite(1, 1023);  // H = 8
    ChunkProcess p(g, 0);
    Rng rng(3);
    p.ring(0, 1, rng);  // good split: 128 chunks each, alpha = 1
    CHECK(p.chunks_at(0) == 128);
    CHECK(p.chunks_at(1) == 128);
    for (auto a : p.state().alpha) CHECK(a == 1);
    CHECK(p.check_invariants());
    p.ring(0, 2, rng);  // 0 -> 2 split
    CHECK(p.chunks_at(2) == 64);
    CHECK(p.check_invariants());
    // Occupied on both ends: beta event.
    ChunkProcess q(g, 0);
    q.ring(0, 1, rng);
    q.ring(0, 1, rng);
    CHECK(q.cemetery_count() == 256);
    CHECK(q.beta_events() == 1);
    for (auto b : q.state().beta) CHECK(b == 1);
    CHECK(q.check_invariants());
  }

  TEST_CASE("lone chunk is sent to the cemetery with alpha = H + 1") {
    const Graph g = complete_bipartite(1, 1023);
    ChunkProcess p(g, 0);
    Rng rng(4);
    // Repeatedly split the centre's mass onto fresh leaves until one chunk remains.
    for (Vertex leaf = 1; leaf <= 8; ++leaf) p.ring(0, leaf, rng);
    CHECK(p.chunks_at(0) == 1);
    const std::uint32_t lone = [&] {
      for (std::uint32_t u = 0; u < p.chunk_count(); ++u)
        if (p.state().position[u] == 0) return u;
      return 0u;
    }();
    CHECK(p.state().alpha[lone] == 8);
    p.ring(0, 100, rng);
    CHECK(p.state().alpha[lone] == 9);
    CHECK(p.state().position[lone] == kCemetery);
    CHECK(p.alpha_events() == 1);
    CHECK(p.check_invariants());
  }

  TEST_CASE("coupled run: conservation and domination on every event") {
    const Graph g = complete_bipartite(1, 1023);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Rng rng(seed);
      const auto rep = coupled_chunk_run(g, 0, 8.0, rng);
      CHECK(rep.events > 0);
      CHECK(rep.conserved);
      CHECK(rep.dominated);
      CHECK(rep.w_excess <= rep.eta_l1_half + 1e-12);
    }
  }

  TEST_CASE("t_mix^lambda") {
    CHECK(tmix_lambda(2, 4, 0.0) == doctest::Approx(std::log2(4.0) / 2.0));
    CHECK(chunk_gamma(1, 4096) == doctest::Approx(4095.0 / 4096.0));
  }
}
