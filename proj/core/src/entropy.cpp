#include "avgproc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "avgproc/errors.hpp"
#include "avgproc/numerics.hpp"

namespace avgproc::entropy {

namespace {

double xlogx_ratio(double x, double ref) { return x > 0.0 ? x * std::log(x / ref) : 0.0; }

double floored_relative_entropy(std::span<const double> eta, double floor) {
  const double n = static_cast<double>(eta.size());
  numerics::CompensatedSum s;
  for (double v : eta) {
    const double w = std::max(v, floor);
    s.add(w * std::log(w * n));
  }
  return s.value();
}

double floored_production(const Graph& g, std::span<const double> eta, double floor) {
  const std::uint64_t n = g.n();
  double total = 0.0;
  for (std::uint64_t i = 0; i < g.edge_count(); ++i) {
    const auto [x, y] = g.edge(i);
    const double a = std::max(eta[x], floor);
    const double b = std::max(eta[y], floor);
    const double m = 0.5 * (a + b);
    total += 0.5 * static_cast<double>(n) * (a * std::log(a / m) + b * std::log(b / m));
  }
  return 2.0 / static_cast<double>(n) * total;
}

}  // namespace

double relative_entropy(std::span<const double> eta) {
  const double n = static_cast<double>(eta.size());
  numerics::CompensatedSum s;
  for (double v : eta) s.add(xlogx_ratio(v, 1.0 / n));
  return std::max(0.0, s.value());
}

double local_entropy(std::span<const double> eta, Vertex x, Vertex y, std::uint64_t n) {
  if (x == y) throw ParameterError("local_entropy needs x != y");
  if (x >= eta.size() || y >= eta.size()) throw ParameterError("local_entropy: vertex out of range");
  const double m = 0.5 * (eta[x] + eta[y]);
  if (m == 0.0) return 0.0;
  const double v = 0.5 * static_cast<double>(n) * (xlogx_ratio(eta[x], m) + xlogx_ratio(eta[y], m));
  return std::max(0.0, v);
}

double entropy_production(const Graph& g, std::span<const double> eta) {
  if (eta.size() != g.n()) throw ParameterError("entropy_production: wrong length");
  numerics::CompensatedSum s;
  for (std::uint64_t i = 0; i < g.edge_count(); ++i) {
    const auto [x, y] = g.edge(i);
    s.add(local_entropy(eta, x, y, g.n()));
  }
  return 2.0 / static_cast<double>(g.n()) * s.value();
}

EntropyReport report(const Graph& g, std::span<const double> eta) {
  EntropyReport r;
  r.relative_entropy = relative_entropy(eta);
  r.production = entropy_production(g, eta);
  r.ratio = r.relative_entropy > 0.0 ? r.production / r.relative_entropy
                                     : std::numeric_limits<double>::quiet_NaN();
  return r;
}

double kappa_known(const Graph& g) {
  switch (g.family()) {
    case Family::Hypercube: return 1.0;
    case Family::Complete: {
      const double n = static_cast<double>(g.n());
      return (n - 1.0) / std::log2(n);
    }
    case Family::CompleteBipartite:
      if (g.n() == 2) return 1.0;  // a single edge is K_2
      break;
  }
  throw CapabilityError("entropy constant not known for this graph");
}

double kappa_upper(const Graph& g) { return mean_degree(g) / std::log2(static_cast<double>(g.n())); }

namespace {

void enumerate_grid(int n, int divisions, std::vector<int>& counts, int pos, int left,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (pos == n - 1) {
    counts[pos] = left;
    visit(counts);
    return;
  }
  for (int c = 0; c <= left; ++c) {
    counts[pos] = c;
    enumerate_grid(n, divisions, counts, pos + 1, left - c, visit);
  }
}

}  // namespace

KappaEstimate kappa_estimate(const Graph& g, const KappaOptions& opts) {
  const int n = static_cast<int>(g.n());
  if (g.n() > 6) throw CapabilityError("kappa_estimate is limited to n <= 6");
  const int divisions = opts.grid_divisions > 0 ? opts.grid_divisions : (n <= 4 ? 50 : 15);
  const double floor = opts.floor;
  // Points this close to uniform are 0/0 for the ratio and are skipped.
  const double d_min = 1e-9;

  auto objective = [&](const std::vector<double>& eta) {
    const double d = floored_relative_entropy(eta, floor);
    if (d < d_min) return std::numeric_limits<double>::infinity();
    return floored_production(g, eta, floor) / d;
  };

  KappaEstimate best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<int> counts(n);
  std::vector<double> eta(n);
  enumerate_grid(n, divisions, counts, 0, divisions, [&](const std::vector<int>& c) {
    for (int i = 0; i < n; ++i) eta[i] = static_cast<double>(c[i]) / divisions;
    const double v = objective(eta);
    if (v < best.value) {
      best.value = v;
      best.minimizer = eta;
    }
  });
  if (!std::isfinite(best.value)) throw NumericalError("kappa_estimate: no admissible grid point");

  // Pairwise projected coordinate descent: move mass between two entries,
  // clamped to the simplex, halving the step when nothing improves.
  std::vector<double> cur = best.minimizer;
  double cur_val = best.value;
  double step = 1.0 / divisions;
  while (step >= opts.min_step) {
    bool improved = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double move = std::min(step, cur[i]);
        if (move <= 0.0) continue;
        std::vector<double> trial = cur;
        trial[i] -= move;
        trial[j] += move;
        const double v = objective(trial);
        if (v < cur_val) {
          cur = std::move(trial);
          cur_val = v;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  best.value = cur_val;
  best.minimizer = cur;
  return best;
}

DecayCheck entropy_decay_check(const Graph& g, const MassConfig& xi, double t,
                               const MonteCarlo& mc, double kappa) {
  check_mass(xi);
  if (mc.replicas < 2) throw ParameterError("need at least 2 replicas");
  struct Pair {
    double d = 0.0;
    double l1 = 0.0;
  };
  auto rows = run_replicas<Pair>(mc, [&](std::size_t, Rng& rng) {
    const MassConfig eta = simulate(g, xi, t, rng);
    return Pair{relative_entropy(eta), lp_distance(eta, 1).power};
  });
  std::vector<double> d(rows.size()), l1(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    d[r] = rows[r].d;
    l1[r] = rows[r].l1;
  }
  DecayCheck out;
  const double d0 = relative_entropy(xi);
  out.mean_entropy = estimate(d);
  out.bound = std::exp(-kappa * t) * d0;
  out.mean_l1 = estimate(l1);
  out.l1_bound = std::exp(-0.5 * kappa * t) * std::sqrt(2.0 * d0);
  return out;
}

double pinsker_bound(double d_value) {
  if (d_value < 0.0) throw ParameterError("relative entropy must be >= 0");
  return std::sqrt(2.0 * d_value);
}

double fannes_audenaert_lb(double d_value, std::uint64_t n) {
  if (d_value < 0.0) throw ParameterError("relative entropy must be >= 0");
  if (n < 2) throw ParameterError("need n >= 2");
  const double ln = std::log(static_cast<double>(n));
  return d_value / ln - 1.0 / (std::exp(1.0) * ln);
}

double entropic_lb_time(const Graph& g, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must be in (0, 1)");
  return (1.0 - eps) * std::log2(static_cast<double>(g.n())) / mean_degree(g);
}

}  // namespace avgproc::entropy
