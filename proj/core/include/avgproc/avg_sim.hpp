#pragma once

#include <span>
#include <vector>

#include "avgproc/graph.hpp"
#include "avgproc/replica.hpp"
#include "avgproc/rng.hpp"
#include "avgproc/stats.hpp"

namespace avgproc {

/// Probability mass function on the vertices 0..n-1.
using MassConfig = std::vector<double>;

MassConfig dirac(std::uint64_t n, Vertex x);
MassConfig uniform_mass(std::uint64_t n);

/// Throws ParameterError unless all entries are >= 0 and they sum to 1
/// within `tol`.
void check_mass(std::span<const double> eta, double tol = 1e-9);

/// Both endpoints become (eta[x] + eta[y]) / 2.
MassConfig pair_update(const MassConfig& eta, Vertex x, Vertex y);
void pair_update_in_place(MassConfig& eta, Vertex x, Vertex y);

/// Advances eta by the averaging dynamics for time t: gaps are Exp(|E|) and
/// each event averages a uniformly chosen edge.
void advance(const Graph& g, MassConfig& eta, double t, Rng& rng);

MassConfig simulate(const Graph& g, MassConfig xi, double t, Rng& rng);

struct LpDistance {
  double power = 0.0;  // (1/n) sum |n eta(x) - 1|^p
  double norm = 0.0;   // power^(1/p)
};

LpDistance lp_distance(std::span<const double> eta, int p);

/// Estimate of E ||eta_t/pi - 1||_p^p over mc.replicas independent runs.
Estimate mean_lp(const Graph& g, const MassConfig& xi, double t, int p, const MonteCarlo& mc);

/// Same, at several times at once; each replica is advanced through the
/// sorted times so the estimates at different times share replicas.
std::vector<Estimate> mean_lp_path(const Graph& g, const MassConfig& xi,
                                   std::span<const double> times, int p, const MonteCarlo& mc);

/// Per-vertex Monte Carlo mean of eta_t (the duality check target).
std::vector<Estimate> mean_mass(const Graph& g, const MassConfig& xi, double t,
                                const MonteCarlo& mc);

/// Monte Carlo mean of eta_t(x) * eta_t(y) for all ordered pairs (n^2 entries,
/// row-major). n is capped at 64.
std::vector<Estimate> mean_second_moment(const Graph& g, const MassConfig& xi, double t,
                                         const MonteCarlo& mc);

}  // namespace avgproc
