#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "avgproc/avg_sim.hpp"
#include "avgproc/graph.hpp"
#include "avgproc/replica.hpp"
#include "avgproc/rng.hpp"
#include "avgproc/stats.hpp"

namespace avgproc {

inline constexpr Vertex kCemetery = std::numeric_limits<Vertex>::max();

/// H = floor(log2 n - (ln n)^(1/3)); the process uses 2^H chunks.
int chunk_exponent(std::uint64_t n);

/// gamma = m(n-m)/n and t_mix^lambda = log2(n)/(2 gamma) + lambda sqrt(ln n)/gamma.
double chunk_gamma(std::uint64_t m, std::uint64_t n);
double tmix_lambda(std::uint64_t m, std::uint64_t n, double lambda);

struct ChunkState {
  int H = 0;
  double t = 0.0;
  std::vector<Vertex> position;      // kCemetery once dead
  std::vector<std::uint8_t> alpha;   // chunk mass is 2^-alpha while alive
  std::vector<std::uint8_t> beta;
};

/// Dyadic chunk discretization of the averaging process on a complete
/// bipartite graph. Mass is tracked as integer chunk counts, so conservation
/// is exact.
class ChunkProcess {
 public:
  ChunkProcess(const Graph& g, Vertex x0);

  /// Processes a ring of edge xy.
  void ring(Vertex x, Vertex y, Rng& rng);
  /// Runs its own event stream up to absolute time t (>= current time).
  void advance_to(double t, Rng& rng);

  const ChunkState& state() const { return state_; }
  std::uint64_t chunk_count() const { return state_.position.size(); }
  std::uint64_t chunks_at(Vertex x) const { return at_[x].size(); }
  std::uint64_t cemetery_count() const { return dead_; }
  /// w_t(x) = (chunks at x) * 2^-H.
  double mass_at(Vertex x) const;
  /// Integer identity: cemetery + sum over vertices == 2^H, and every
  /// occupied vertex satisfies count * 2^alpha == 2^H for each of its chunks.
  bool check_invariants() const;

  std::uint64_t alpha_events() const { return alpha_events_; }
  std::uint64_t beta_events() const { return beta_events_; }

 private:
  void kill_all_at(Vertex x, bool beta);

  const Graph* g_;
  ChunkState state_;
  std::vector<std::vector<std::uint32_t>> at_;
  std::uint64_t dead_ = 0;
  std::uint64_t alpha_events_ = 0;
  std::uint64_t beta_events_ = 0;
};

ChunkState chunk_simulate(const Graph& g, Vertex x0, double t, Rng& rng);

struct ChunkAliveStats {
  Estimate alive;       // fraction of chunks with beta = 0 and alpha <= H
  Estimate alpha_high;  // fraction with alpha >= log2 n - b sqrt(ln n)
};

ChunkAliveStats chunk_alive_stats(const Graph& g, Vertex x0, double t, double b,
                                  const MonteCarlo& mc);

struct CoupledRunReport {
  std::uint64_t events = 0;
  bool conserved = true;    // integer conservation after every event
  bool dominated = true;    // eta(x) >= w(x) at every vertex after every event
  double eta_l1_half = 0.0; // (1/2)||eta_t/pi - 1||_1 at the final time
  double w_excess = 0.0;    // sum_x (w_t(x) - 1/n)_+ at the final time
};

/// Runs the averaging process and the chunk process on one shared event
/// stream up to time t, checking conservation and domination after each event.
CoupledRunReport coupled_chunk_run(const Graph& g, Vertex x0, double t, Rng& rng);

}  // namespace avgproc
