#pragma once

#include <cstdint>
#include <vector>

#include "avgproc/avg_sim.hpp"
#include "avgproc/graph.hpp"
#include "avgproc/numerics.hpp"
#include "avgproc/replica.hpp"
#include "avgproc/stats.hpp"

namespace avgproc {

/// Law of the rate-1/2 random walk at time t started from xi.
struct RwKernel {
  std::vector<double> probs;
  double t = 0.0;
};

/// Law of the coupled pair (X_t, Y_t) over ordered pairs, index x*n + y.
struct PairKernel {
  std::uint64_t n = 0;
  std::vector<double> probs;
  double t = 0.0;
  double operator()(Vertex x, Vertex y) const { return probs[x * n + y]; }
};

/// Sparse rate matrix: off-diagonal entries in CSR form plus the diagonal.
struct SparseGenerator {
  std::size_t size = 0;
  std::vector<std::size_t> row_start;
  std::vector<std::uint32_t> col;
  std::vector<double> rate;
  std::vector<double> diag;

  double max_exit_rate() const;
  /// Dense copy for tests (size <= 4096).
  numerics::DenseMatrix dense() const;
  /// out = v^T (I + Q/lambda)
  void forward_step(const std::vector<double>& v, std::vector<double>& out, double lambda) const;
  /// out = (I + Q/lambda) v
  void backward_step(const std::vector<double>& v, std::vector<double>& out, double lambda) const;
};

inline constexpr double kUniformizationTail = 1e-12;

/// Random walk generator (jump rate 1/2 along each edge); n <= 4096.
SparseGenerator rw_generator(const Graph& g);

/// Closed forms per family (hypercube product, bipartite part means,
/// complete graph); any n up to 2^26.
RwKernel rw_kernel(const Graph& g, const MassConfig& xi, double t);

/// Same law by uniformization of the sparse generator (n <= 4096).
RwKernel rw_kernel_generic(const Graph& g, const MassConfig& xi, double t);

/// ||pi_t^xi / pi - 1||_2^2.
double rw_l2_distance(const Graph& g, const MassConfig& xi, double t);

/// Coupled random walk generator on ordered pairs (n <= 64).
SparseGenerator crw_generator(const Graph& g);

/// Forward law of the coupled pair started from xi (x) xi.
PairKernel pair_kernel(const Graph& g, const MassConfig& xi, double t);

/// P(X_t = Y_t) for the coupled pair started from xi (x) xi; exact, n <= 64.
double meeting_probability(const Graph& g, const MassConfig& xi, double t);

/// Monte Carlo version for any n, simulating the two particles directly.
Estimate meeting_probability_mc(const Graph& g, const MassConfig& xi, double t,
                                const MonteCarlo& mc);

/// Meeting probabilities from every ordered start pair: entry x*n+y is
/// P_{x,y}(X_u = Y_u).
std::vector<double> meeting_from_all(const Graph& g, double u);

/// Phi_u(x,y) = (M(x,x) + M(y,y) - 2 M(x,y)) / 2 with M from meeting_from_all.
double phi(const Graph& g, Vertex x, Vertex y, double u);

/// (n/2) int_0^t sum_{xy in E} (pi_s(x) - pi_s(y))^2 Phi_{t-s}(x,y) ds by
/// adaptive Simpson with absolute tolerance `tol`.
double noise_term(const Graph& g, const MassConfig& xi, double t, double tol = 1e-8);

}  // namespace avgproc
