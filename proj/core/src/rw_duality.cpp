#include "avgproc/rw_duality.hpp"

#include <algorithm>
#include <cmath>

#include "avgproc/errors.hpp"

namespace avgproc {

namespace {

constexpr std::uint64_t kGenericCap = 4096;
constexpr std::uint64_t kPairCap = 64;
constexpr std::uint64_t kClosedFormCap = std::uint64_t{1} << 26;

struct RowBuilder {
  std::vector<std::pair<std::uint32_t, double>> entries;
  void add(std::uint32_t c, double r) { entries.emplace_back(c, r); }
};

void append_row(SparseGenerator& gen, std::size_t row, RowBuilder& b) {
  std::sort(b.entries.begin(), b.entries.end());
  double out = 0.0;
  for (std::size_t i = 0; i < b.entries.size();) {
    const std::uint32_t c = b.entries[i].first;
    double r = 0.0;
    while (i < b.entries.size() && b.entries[i].first == c) r += b.entries[i++].second;
    if (c == row) continue;  // self-transitions have no effect
    gen.col.push_back(c);
    gen.rate.push_back(r);
    out += r;
  }
  gen.diag[row] = -out;
  gen.row_start[row + 1] = gen.col.size();
  b.entries.clear();
}

bool is_dirac(const MassConfig& xi, Vertex* where) {
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] == 1.0) {
      *where = static_cast<Vertex>(i);
      return true;
    }
  }
  return false;
}

void check_xi(const Graph& g, const MassConfig& xi) {
  if (xi.size() != g.n()) throw ParameterError("initial mass has wrong length");
  check_mass(xi);
}

std::vector<double> hypercube_kernel(const Graph& g, const MassConfig& xi, double t) {
  const double p = 0.5 * (1.0 + std::exp(-t));
  std::vector<double> v = xi;
  const std::uint64_t n = g.n();
  for (int bit = 0; bit < g.dimension(); ++bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (x & mask) continue;
      const double a = v[x];
      const double b = v[x | mask];
      v[x] = p * a + (1.0 - p) * b;
      v[x | mask] = p * b + (1.0 - p) * a;
    }
  }
  return v;
}

std::vector<double> bipartite_kernel(const Graph& g, const MassConfig& xi, double t) {
  const std::uint64_t m = g.m();
  const std::uint64_t k = g.n() - m;
  const double md = static_cast<double>(m);
  const double kd = static_cast<double>(k);
  double a0 = 0.0;
  for (std::uint64_t x = 0; x < m; ++x) a0 += xi[x];
  const double a_inf = md / (md + kd);
  const double a_t = a_inf + (a0 - a_inf) * std::exp(-0.5 * (md + kd) * t);
  const double e1 = std::exp(-0.5 * kd * t);
  const double e2 = std::exp(-0.5 * md * t);
  std::vector<double> out(g.n());
  for (std::uint64_t x = 0; x < m; ++x) out[x] = a_t / md + (xi[x] - a0 / md) * e1;
  for (std::uint64_t y = m; y < g.n(); ++y)
    out[y] = (1.0 - a_t) / kd + (xi[y] - (1.0 - a0) / kd) * e2;
  return out;
}

std::vector<double> complete_kernel(const Graph& g, const MassConfig& xi, double t) {
  const double n = static_cast<double>(g.n());
  const double e = std::exp(-0.5 * n * t);
  std::vector<double> out(g.n());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = 1.0 / n + (xi[x] - 1.0 / n) * e;
  return out;
}

}  // namespace

double SparseGenerator::max_exit_rate() const {
  double mx = 0.0;
  for (double d : diag) mx = std::max(mx, -d);
  return mx;
}

numerics::DenseMatrix SparseGenerator::dense() const {
  if (size > 4096) throw CapabilityError("dense generator copy capped at 4096 states");
  numerics::DenseMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) {
    m(i, i) = diag[i];
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k) m(i, col[k]) += rate[k];
  }
  return m;
}

void SparseGenerator::forward_step(const std::vector<double>& v, std::vector<double>& out,
                                   double lambda) const {
  out.resize(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = v[i] * (1.0 + diag[i] / lambda);
  for (std::size_t i = 0; i < size; ++i) {
    if (v[i] == 0.0) continue;
    const double vi = v[i] / lambda;
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k) out[col[k]] += vi * rate[k];
  }
}

void SparseGenerator::backward_step(const std::vector<double>& v, std::vector<double>& out,
                                    double lambda) const {
  out.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    double s = v[i] * (1.0 + diag[i] / lambda);
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k) s += rate[k] * v[col[k]] / lambda;
    out[i] = s;
  }
}

SparseGenerator rw_generator(const Graph& g) {
  if (g.n() > kGenericCap) throw CapabilityError("random walk generator capped at n = 4096");
  SparseGenerator gen;
  gen.size = g.n();
  gen.row_start.assign(g.n() + 1, 0);
  gen.diag.assign(g.n(), 0.0);
  RowBuilder b;
  for (Vertex x = 0; x < g.n(); ++x) {
    for (std::uint64_t j = 0; j < g.degree(x); ++j) b.add(g.neighbor(x, j), 0.5);
    append_row(gen, x, b);
  }
  return gen;
}

RwKernel rw_kernel_generic(const Graph& g, const MassConfig& xi, double t) {
  if (t < 0.0) throw ParameterError("rw_kernel: negative time");
  check_xi(g, xi);
  const SparseGenerator gen = rw_generator(g);
  const double lambda = gen.max_exit_rate();
  RwKernel k;
  k.t = t;
  k.probs = numerics::uniformize(xi, lambda, t, kUniformizationTail,
                                 [&](const std::vector<double>& v, std::vector<double>& out) {
                                   gen.forward_step(v, out, lambda);
                                 });
  return k;
}

RwKernel rw_kernel(const Graph& g, const MassConfig& xi, double t) {
  if (t < 0.0) throw ParameterError("rw_kernel: negative time");
  check_xi(g, xi);
  RwKernel k;
  k.t = t;
  if (g.n() > kClosedFormCap) throw CapabilityError("rw_kernel output capped at 2^26 vertices");
  switch (g.family()) {
    case Family::Hypercube: k.probs = hypercube_kernel(g, xi, t); break;
    case Family::CompleteBipartite: k.probs = bipartite_kernel(g, xi, t); break;
    case Family::Complete: k.probs = complete_kernel(g, xi, t); break;
  }
  return k;
}

double rw_l2_distance(const Graph& g, const MassConfig& xi, double t) {
  Vertex x0 = 0;
  if (g.family() == Family::Hypercube && is_dirac(xi, &x0)) {
    return std::expm1(static_cast<double>(g.dimension()) * std::log1p(std::exp(-2.0 * t)));
  }
  const RwKernel k = rw_kernel(g, xi, t);
  return lp_distance(k.probs, 2).power;
}

SparseGenerator crw_generator(const Graph& g) {
  if (g.n() > kPairCap) throw CapabilityError("coupled random walk capped at n = 64");
  const std::uint64_t n = g.n();
  SparseGenerator gen;
  gen.size = n * n;
  gen.row_start.assign(gen.size + 1, 0);
  gen.diag.assign(gen.size, 0.0);
  RowBuilder b;
  auto idx = [n](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint32_t>(x * n + y); };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = 0; c < n; ++c) {
      // Each edge touching a particle rings at rate 1; list each edge once.
      auto ring = [&](Vertex x, Vertex y) {
        const bool a_on = (a == x || a == y);
        const bool c_on = (c == x || c == y);
        const Vertex ends[2] = {x, y};
        if (a_on && c_on) {
          for (Vertex u : ends)
            for (Vertex v : ends) b.add(idx(u, v), 0.25);
        } else if (a_on) {
          for (Vertex u : ends) b.add(idx(u, c), 0.5);
        } else {
          for (Vertex v : ends) b.add(idx(a, v), 0.5);
        }
      };
      for (std::uint64_t j = 0; j < g.degree(a); ++j) ring(a, g.neighbor(a, j));
      if (c != a) {
        for (std::uint64_t j = 0; j < g.degree(c); ++j) {
          const Vertex z = g.neighbor(c, j);
          if (z != a) ring(c, z);
        }
      }
      append_row(gen, idx(a, c), b);
    }
  }
  return gen;
}

PairKernel pair_kernel(const Graph& g, const MassConfig& xi, double t) {
  if (t < 0.0) throw ParameterError("pair_kernel: negative time");
  check_xi(g, xi);
  const SparseGenerator gen = crw_generator(g);
  const std::uint64_t n = g.n();
  std::vector<double> v(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) v[x * n + y] = xi[x] * xi[y];
  const double lambda = gen.max_exit_rate();
  PairKernel k;
  k.n = n;
  k.t = t;
  k.probs = numerics::uniformize(std::move(v), lambda, t, kUniformizationTail,
                                 [&](const std::vector<double>& in, std::vector<double>& out) {
                                   gen.forward_step(in, out, lambda);
                                 });
  return k;
}

double meeting_probability(const Graph& g, const MassConfig& xi, double t) {
  const PairKernel k = pair_kernel(g, xi, t);
  numerics::CompensatedSum s;
  for (std::uint64_t x = 0; x < k.n; ++x) s.add(k.probs[x * k.n + x]);
  return s.value();
}

std::vector<double> meeting_from_all(const Graph& g, double u) {
  if (u < 0.0) throw ParameterError("meeting_from_all: negative time");
  const SparseGenerator gen = crw_generator(g);
  const std::uint64_t n = g.n();
  std::vector<double> h(n * n, 0.0);
  for (std::uint64_t x = 0; x < n; ++x) h[x * n + x] = 1.0;
  const double lambda = gen.max_exit_rate();
  return numerics::uniformize(std::move(h), lambda, u, kUniformizationTail,
                              [&](const std::vector<double>& in, std::vector<double>& out) {
                                gen.backward_step(in, out, lambda);
                              });
}

namespace {
double phi_from(const std::vector<double>& meet, std::uint64_t n, Vertex x, Vertex y) {
  const double v = 0.5 * (meet[x * n + x] + meet[y * n + y] - 2.0 * meet[x * n + y]);
  if (v < -1e-10 || v > 1.0 + 1e-10) throw NumericalError("Phi outside [0, 1]");
  return v;
}
}  // namespace

double phi(const Graph& g, Vertex x, Vertex y, double u) {
  if (x >= g.n() || y >= g.n()) throw ParameterError("phi: vertex out of range");
  if (x == y) return 0.0;
  const std::vector<double> meet = meeting_from_all(g, u);
  return phi_from(meet, g.n(), x, y);
}

double noise_term(const Graph& g, const MassConfig& xi, double t, double tol) {
  if (t < 0.0) throw ParameterError("noise_term: negative time");
  check_xi(g, xi);
  if (g.n() > kPairCap) throw CapabilityError("noise term capped at n = 64");
  if (t == 0.0) return 0.0;
  const std::vector<Edge> edges = g.edges();
  const std::uint64_t n = g.n();
  const double half_n = 0.5 * static_cast<double>(n);
  auto integrand = [&](double s) {
    const std::vector<double> pi_s = rw_kernel(g, xi, s).probs;
    double total = 0.0;
    bool any = false;
    for (const auto& [x, y] : edges) any = any || pi_s[x] != pi_s[y];
    if (!any) return 0.0;
    const std::vector<double> meet = meeting_from_all(g, t - s);
    for (const auto& [x, y] : edges) {
      const double diff = pi_s[x] - pi_s[y];
      total += diff * diff * phi_from(meet, n, x, y);
    }
    return half_n * total;
  };
  return numerics::adaptive_simpson(integrand, 0.0, t, tol, 20);
}

Estimate meeting_probability_mc(const Graph& g, const MassConfig& xi, double t,
                                const MonteCarlo& mc) {
  check_xi(g, xi);
  if (mc.replicas < 2) throw ParameterError("need at least 2 replicas");
  // Inverse-CDF sampling of the start vertices from xi.
  std::vector<double> cdf(xi.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) cdf[i] = (acc += xi[i]);
  auto draw = [&](Rng& rng) {
    const double u = rng.uniform01() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<Vertex>(std::min<std::size_t>(it - cdf.begin(), xi.size() - 1));
  };
  auto samples = run_replicas<double>(mc, [&](std::size_t, Rng& rng) {
    Vertex a = draw(rng);
    Vertex b = draw(rng);
    double clock = 0.0;
    for (;;) {
      // Edges touching a particle, each at rate 1; the edge ab is listed twice
      // when a and b are adjacent, so one copy is rejected.
      const std::uint64_t da = g.degree(a);
      const std::uint64_t db = a == b ? 0 : g.degree(b);
      const bool dup = a != b && g.adjacent(a, b);
      const double rate = static_cast<double>(da + db - (dup ? 1 : 0));
      clock += rng.exponential(rate);
      if (clock > t) break;
      Vertex x, y;
      for (;;) {
        const std::uint64_t j = rng.index(da + db);
        if (j < da) {
          x = a;
          y = g.neighbor(a, j);
          break;
        }
        x = b;
        y = g.neighbor(b, j - da);
        if (!(dup && y == a)) break;
      }
      const bool a_on = (a == x || a == y);
      const bool b_on = (b == x || b == y);
      if (a_on) a = rng.coin() ? x : y;
      if (b_on) b = rng.coin() ? x : y;
    }
    return a == b ? 1.0 : 0.0;
  });
  return estimate(samples);
}

}  // namespace avgproc
