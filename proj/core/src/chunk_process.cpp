#include "avgproc/chunk_process.hpp"

#include <cmath>

#include "avgproc/errors.hpp"

namespace avgproc {

int chunk_exponent(std::uint64_t n) {
  if (n < 2) throw ParameterError("chunk process needs n >= 2");
  const double nd = static_cast<double>(n);
  const double h = std::floor(std::log2(nd) - std::cbrt(std::log(nd)));
  if (h < 1.0) throw ParameterError("n too small: chunk exponent H < 1");
  return static_cast<int>(h);
}

double chunk_gamma(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || 2 * m > n) throw ParameterError("need 1 <= m <= n/2");
  return static_cast<double>(m) * static_cast<double>(n - m) / static_cast<double>(n);
}

double tmix_lambda(std::uint64_t m, std::uint64_t n, double lambda) {
  const double gamma = chunk_gamma(m, n);
  const double nd = static_cast<double>(n);
  return std::log2(nd) / (2.0 * gamma) + lambda * std::sqrt(std::log(nd)) / gamma;
}

ChunkProcess::ChunkProcess(const Graph& g, Vertex x0) : g_(&g) {
  if (g.family() != Family::CompleteBipartite)
    throw CapabilityError("chunk process is defined on complete bipartite graphs");
  if (x0 >= g.n()) throw ParameterError("chunk process: start vertex out of range");
  state_.H = chunk_exponent(g.n());
  const std::size_t count = std::size_t{1} << state_.H;
  state_.position.assign(count, x0);
  state_.alpha.assign(count, 0);
  state_.beta.assign(count, 0);
  at_.resize(g.n());
  at_[x0].resize(count);
  for (std::size_t u = 0; u < count; ++u) at_[x0][u] = static_cast<std::uint32_t>(u);
}

double ChunkProcess::mass_at(Vertex x) const {
  return std::ldexp(static_cast<double>(at_[x].size()), -state_.H);
}

void ChunkProcess::kill_all_at(Vertex x, bool beta) {
  for (std::uint32_t u : at_[x]) {
    state_.position[u] = kCemetery;
    if (beta) state_.beta[u] = 1;
  }
  dead_ += at_[x].size();
  at_[x].clear();
}

void ChunkProcess::ring(Vertex x, Vertex y, Rng& rng) {
  auto& ax = at_[x];
  auto& ay = at_[y];
  if (ax.empty() && ay.empty()) return;
  if (!ax.empty() && !ay.empty()) {
    ++beta_events_;
    kill_all_at(x, true);
    kill_all_at(y, true);
    return;
  }
  auto& from = ax.empty() ? ay : ax;
  auto& to = ax.empty() ? ax : ay;
  const Vertex dest = ax.empty() ? x : y;
  const std::size_t c = from.size();
  if (c == 1) {
    // A lone chunk has necessarily been halved H times.
    const std::uint32_t u = from.front();
    if (state_.alpha[u] != state_.H) throw NumericalError("chunk process: lone chunk with alpha != H");
    ++alpha_events_;
    state_.alpha[u] = static_cast<std::uint8_t>(state_.H + 1);
    state_.position[u] = kCemetery;
    ++dead_;
    from.clear();
    return;
  }
  if ((c & (c - 1)) != 0) throw NumericalError("chunk process: non-dyadic occupancy");
  // Partial Fisher-Yates: the last c/2 slots become a uniform random half.
  const std::size_t half = c / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t last = c - 1 - i;
    const std::size_t j = static_cast<std::size_t>(rng.index(last + 1));
    std::swap(from[j], from[last]);
  }
  to.assign(from.end() - static_cast<std::ptrdiff_t>(half), from.end());
  from.resize(c - half);
  for (std::uint32_t u : from) ++state_.alpha[u];
  for (std::uint32_t u : to) {
    ++state_.alpha[u];
    state_.position[u] = dest;
  }
}

void ChunkProcess::advance_to(double t, Rng& rng) {
  if (t < state_.t) throw ParameterError("chunk process: time must not decrease");
  const double rate = static_cast<double>(g_->edge_count());
  double clock = state_.t + rng.exponential(rate);
  while (clock <= t) {
    const auto [x, y] = g_->edge(rng.index(g_->edge_count()));
    ring(x, y, rng);
    clock += rng.exponential(rate);
  }
  state_.t = t;
}

bool ChunkProcess::check_invariants() const {
  const std::uint64_t total = std::uint64_t{1} << state_.H;
  std::uint64_t alive = 0;
  for (std::size_t x = 0; x < at_.size(); ++x) {
    const std::uint64_t c = at_[x].size();
    alive += c;
    for (std::uint32_t u : at_[x]) {
      if (state_.position[u] != x) return false;
      if (state_.beta[u] != 0) return false;
      if ((c << state_.alpha[u]) != total) return false;
    }
  }
  return alive + dead_ == total;
}

ChunkState chunk_simulate(const Graph& g, Vertex x0, double t, Rng& rng) {
  ChunkProcess proc(g, x0);
  proc.advance_to(t, rng);
  return proc.state();
}

ChunkAliveStats chunk_alive_stats(const Graph& g, Vertex x0, double t, double b,
                                  const MonteCarlo& mc) {
  if (mc.replicas < 2) throw ParameterError("need at least 2 replicas");
  const double nd = static_cast<double>(g.n());
  const double threshold = std::log2(nd) - b * std::sqrt(std::log(nd));
  struct Pair {
    double alive = 0.0;
    double high = 0.0;
  };
  auto rows = run_replicas<Pair>(mc, [&](std::size_t, Rng& rng) {
    const ChunkState s = chunk_simulate(g, x0, t, rng);
    std::uint64_t alive = 0, high = 0;
    for (std::size_t u = 0; u < s.position.size(); ++u) {
      if (s.beta[u] == 0 && s.alpha[u] <= s.H) ++alive;
      if (static_cast<double>(s.alpha[u]) >= threshold) ++high;
    }
    const double total = static_cast<double>(s.position.size());
    return Pair{static_cast<double>(alive) / total, static_cast<double>(high) / total};
  });
  std::vector<double> a(rows.size()), h(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    a[r] = rows[r].alive;
    h[r] = rows[r].high;
  }
  return {estimate(a), estimate(h)};
}

CoupledRunReport coupled_chunk_run(const Graph& g, Vertex x0, double t, Rng& rng) {
  ChunkProcess proc(g, x0);
  MassConfig eta = dirac(g.n(), x0);
  CoupledRunReport rep;
  const double rate = static_cast<double>(g.edge_count());
  double clock = rng.exponential(rate);
  while (clock <= t) {
    const auto [x, y] = g.edge(rng.index(g.edge_count()));
    pair_update_in_place(eta, x, y);
    proc.ring(x, y, rng);
    ++rep.events;
    if (!proc.check_invariants()) rep.conserved = false;
    // Only the two touched vertices change.
    if (eta[x] < proc.mass_at(x) || eta[y] < proc.mass_at(y)) rep.dominated = false;
    clock += rng.exponential(rate);
  }
  const double n = static_cast<double>(g.n());
  rep.eta_l1_half = 0.5 * lp_distance(eta, 1).power;
  for (Vertex x = 0; x < g.n(); ++x) rep.w_excess += std::max(0.0, proc.mass_at(x) - 1.0 / n);
  return rep;
}

}  // namespace avgproc
