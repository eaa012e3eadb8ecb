#include "avgproc/avg_sim.hpp"

#include <algorithm>
#include <cmath>

#include "avgproc/errors.hpp"
#include "avgproc/numerics.hpp"

namespace avgproc {

MassConfig dirac(std::uint64_t n, Vertex x) {
  if (x >= n) throw ParameterError("dirac: vertex out of range");
  MassConfig eta(n, 0.0);
  eta[x] = 1.0;
  return eta;
}

MassConfig uniform_mass(std::uint64_t n) {
  return MassConfig(n, 1.0 / static_cast<double>(n));
}

void check_mass(std::span<const double> eta, double tol) {
  numerics::CompensatedSum s;
  for (double v : eta) {
    if (!(v >= 0.0)) throw ParameterError("mass configuration has a negative or NaN entry");
    s.add(v);
  }
  if (std::abs(s.value() - 1.0) > tol) throw ParameterError("mass configuration does not sum to 1");
}

void pair_update_in_place(MassConfig& eta, Vertex x, Vertex y) {
  if (x == y) throw ParameterError("pair_update needs distinct vertices");
  if (x >= eta.size() || y >= eta.size()) throw ParameterError("pair_update: vertex out of range");
  const double avg = 0.5 * (eta[x] + eta[y]);
  eta[x] = avg;
  eta[y] = avg;
}

MassConfig pair_update(const MassConfig& eta, Vertex x, Vertex y) {
  MassConfig out = eta;
  pair_update_in_place(out, x, y);
  return out;
}

void advance(const Graph& g, MassConfig& eta, double t, Rng& rng) {
  if (t < 0.0) throw ParameterError("simulate: negative time");
  const double rate = static_cast<double>(g.edge_count());
  const std::uint64_t edges = g.edge_count();
  double clock = rng.exponential(rate);
  while (clock <= t) {
    const auto [x, y] = g.edge(rng.index(edges));
    const double avg = 0.5 * (eta[x] + eta[y]);
    eta[x] = avg;
    eta[y] = avg;
    clock += rng.exponential(rate);
  }
}

MassConfig simulate(const Graph& g, MassConfig xi, double t, Rng& rng) {
  if (xi.size() != g.n()) throw ParameterError("simulate: mass has wrong length");
  advance(g, xi, t, rng);
  return xi;
}

LpDistance lp_distance(std::span<const double> eta, int p) {
  if (p != 1 && p != 2) throw ParameterError("p must be 1 or 2");
  const double n = static_cast<double>(eta.size());
  numerics::CompensatedSum s;
  for (double v : eta) {
    const double dev = std::abs(n * v - 1.0);
    s.add(p == 1 ? dev : dev * dev);
  }
  LpDistance out;
  out.power = s.value() / n;
  out.norm = p == 1 ? out.power : std::sqrt(out.power);
  return out;
}

namespace {

void require_mc(const MonteCarlo& mc) {
  if (mc.replicas < 2) throw ParameterError("need at least 2 replicas");
}

// Advances through sorted, distinct-or-equal times. advance() is memoryless,
// so restarting the clock at each checkpoint does not change the law.
std::vector<double> lp_path_one(const Graph& g, MassConfig eta, std::span<const double> times,
                                int p, Rng& rng) {
  std::vector<double> out(times.size());
  double now = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    advance(g, eta, times[i] - now, rng);
    now = times[i];
    out[i] = lp_distance(eta, p).power;
  }
  return out;
}

}  // namespace

std::vector<Estimate> mean_lp_path(const Graph& g, const MassConfig& xi,
                                   std::span<const double> times, int p, const MonteCarlo& mc) {
  require_mc(mc);
  check_mass(xi);
  if (xi.size() != g.n()) throw ParameterError("mean_lp: mass has wrong length");
  if (p != 1 && p != 2) throw ParameterError("p must be 1 or 2");
  if (!std::is_sorted(times.begin(), times.end()))
    throw ParameterError("mean_lp_path: times must be sorted");
  if (!times.empty() && times.front() < 0.0) throw ParameterError("mean_lp_path: negative time");

  auto rows = run_replicas<std::vector<double>>(
      mc, [&](std::size_t, Rng& rng) { return lp_path_one(g, xi, times, p, rng); });
  std::vector<Estimate> out(times.size());
  std::vector<double> column(mc.replicas);
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (std::size_t r = 0; r < mc.replicas; ++r) column[r] = rows[r][i];
    out[i] = estimate(column);
  }
  return out;
}

Estimate mean_lp(const Graph& g, const MassConfig& xi, double t, int p, const MonteCarlo& mc) {
  const double times[1] = {t};
  return mean_lp_path(g, xi, times, p, mc).front();
}

std::vector<Estimate> mean_mass(const Graph& g, const MassConfig& xi, double t,
                                const MonteCarlo& mc) {
  require_mc(mc);
  check_mass(xi);
  auto rows = run_replicas<MassConfig>(mc, [&](std::size_t, Rng& rng) { return simulate(g, xi, t, rng); });
  std::vector<Estimate> out(g.n());
  std::vector<double> column(mc.replicas);
  for (std::size_t x = 0; x < g.n(); ++x) {
    for (std::size_t r = 0; r < mc.replicas; ++r) column[r] = rows[r][x];
    out[x] = estimate(column);
  }
  return out;
}

std::vector<Estimate> mean_second_moment(const Graph& g, const MassConfig& xi, double t,
                                         const MonteCarlo& mc) {
  require_mc(mc);
  check_mass(xi);
  if (g.n() > 64) throw CapabilityError("second moments are limited to n <= 64");
  const std::size_t n = g.n();
  auto rows = run_replicas<MassConfig>(mc, [&](std::size_t, Rng& rng) { return simulate(g, xi, t, rng); });
  std::vector<Estimate> out(n * n);
  std::vector<double> column(mc.replicas);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t r = 0; r < mc.replicas; ++r) column[r] = rows[r][x] * rows[r][y];
      out[x * n + y] = estimate(column);
    }
  }
  return out;
}

}  // namespace avgproc
