#pragma once

#include <span>
#include <vector>

#include "avgproc/avg_sim.hpp"
#include "avgproc/graph.hpp"
#include "avgproc/replica.hpp"
#include "avgproc/stats.hpp"

namespace avgproc::entropy {

/// D(eta || uniform) in nats, with 0 log 0 = 0.
double relative_entropy(std::span<const double> eta);

/// ent_xy(eta) = (n/2) [eta_x log(eta_x/m) + eta_y log(eta_y/m)], m the pair mean.
double local_entropy(std::span<const double> eta, Vertex x, Vertex y, std::uint64_t n);

/// (2/n) sum over edges of ent_xy(eta).
double entropy_production(const Graph& g, std::span<const double> eta);

struct EntropyReport {
  double relative_entropy = 0.0;
  double production = 0.0;
  double ratio = 0.0;  // NaN when relative_entropy == 0
};
EntropyReport report(const Graph& g, std::span<const double> eta);

/// Known entropy constants: hypercube 1, complete graph (n-1)/log2 n.
double kappa_known(const Graph& g);
/// <deg>/log2 n.
double kappa_upper(const Graph& g);

struct KappaOptions {
  int grid_divisions = 0;     // 0 picks 50 for n <= 4 and 15 for n in {5, 6}
  double min_step = 1e-8;     // descent stops when the step halves below this
  double floor = 1e-12;       // entries floored inside logarithms
};

struct KappaEstimate {
  double value = 0.0;
  std::vector<double> minimizer;
};

/// Minimum of production/D over the simplex (n <= 6): barycentric grid
/// followed by pairwise projected coordinate descent.
KappaEstimate kappa_estimate(const Graph& g, const KappaOptions& opts = {});

struct DecayCheck {
  Estimate mean_entropy;  // E D(eta_t || pi)
  double bound = 0.0;     // e^{-kappa t} D(xi || pi)
  Estimate mean_l1;       // E ||eta_t/pi - 1||_1
  double l1_bound = 0.0;  // e^{-kappa t/2} sqrt(2 D(xi || pi))
};

DecayCheck entropy_decay_check(const Graph& g, const MassConfig& xi, double t,
                               const MonteCarlo& mc, double kappa);

/// sqrt(2 D): Pinsker bound on ||eta/pi - 1||_1.
double pinsker_bound(double d_value);
/// D/log n - 1/(e log n): lower bound on ||eta/pi - 1||_1.
double fannes_audenaert_lb(double d_value, std::uint64_t n);
/// (1 - eps) log2(n) / <deg>.
double entropic_lb_time(const Graph& g, double eps);

}  // namespace avgproc::entropy
