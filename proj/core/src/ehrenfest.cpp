#include "avgproc/ehrenfest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "avgproc/errors.hpp"

namespace avgproc::ehrenfest {

namespace {

constexpr int kMaxD = 2000;

// Largest rate * t for which kernel rows are computed by uniformization.
constexpr double kUniformizationBudget = 2e5;

void check_d(int d) {
  if (d < 1 || d > kMaxD) throw ParameterError("d must be in [1, 2000]");
}

std::vector<double> log_binomial_half(int d) {
  // log C(d,k) by a compensated running sum of log((d-k+1)/k) over the lower
  // half, mirrored; lgamma differences lose ~1e-12 at d = 2000.
  std::vector<double> out(static_cast<std::size_t>(d) + 1);
  const double dd = static_cast<double>(d);
  numerics::CompensatedSum acc;
  acc.add(-dd * std::log(2.0));
  out[0] = acc.value();
  for (int k = 1; 2 * k <= d; ++k) {
    acc.add(std::log((dd - k + 1.0) / k));
    out[k] = acc.value();
  }
  for (int k = 0; 2 * k < d; ++k) out[d - k] = out[k];
  return out;
}

// log nu([0,k]) for k = 0..d.
std::vector<double> log_cumulative(const std::vector<double>& log_nu) {
  std::vector<double> out(log_nu.size());
  double acc = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < log_nu.size(); ++k) {
    const double a = std::max(acc, log_nu[k]);
    acc = a + std::log(std::exp(acc - a) + std::exp(log_nu[k] - a));
    out[k] = acc;
  }
  return out;
}

Tridiagonal leading_block(const Tridiagonal& t, int M) {
  Tridiagonal out;
  out.diag.assign(t.diag.begin(), t.diag.begin() + M);
  out.off.assign(t.off.begin(), t.off.begin() + (M - 1));
  return out;
}

}  // namespace

double BirthDeathChain::nu(int k) const { return std::exp(log_nu.at(k)); }

double BirthDeathChain::detailed_balance_violation() const {
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    // Compare in log space; both sides can underflow at large d.
    const double lhs = log_nu[k] + std::log(birth[k]);
    const double rhs = log_nu[k + 1] + std::log(death[k + 1]);
    worst = std::max(worst, std::abs(std::expm1(lhs - rhs)));
  }
  return worst;
}

BirthDeathChain build(Kind kind, int d) {
  check_d(d);
  BirthDeathChain c;
  c.kind = kind;
  c.d = d;
  c.birth.resize(static_cast<std::size_t>(d) + 1);
  c.death.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    c.birth[k] = static_cast<double>(d - k);
    c.death[k] = static_cast<double>(k);
  }
  if (kind == Kind::S) {
    c.birth[0] = static_cast<double>(d) / 2.0;
    c.death[1] = 0.5;
  }
  c.log_nu = log_binomial_half(d);
  return c;
}

BirthDeathChain build_p(int d) { return build(Kind::P, d); }
BirthDeathChain build_s(int d) { return build(Kind::S, d); }

Tridiagonal symmetrized_generator(const BirthDeathChain& c) {
  Tridiagonal t;
  const std::size_t n = c.size();
  t.diag.resize(n);
  t.off.resize(n - 1);
  for (std::size_t k = 0; k < n; ++k) t.diag[k] = c.birth[k] + c.death[k];
  for (std::size_t k = 0; k + 1 < n; ++k) t.off[k] = -std::sqrt(c.birth[k] * c.death[k + 1]);
  return t;
}

SpectrumCache& SpectrumCache::global() {
  static SpectrumCache cache;
  return cache;
}

void SpectrumCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
  systems_.clear();
  modes_.clear();
}

namespace {
template <class Map, class Make>
auto lookup(std::shared_mutex& mutex, Map& map, const typename Map::key_type& key, Make make) {
  {
    std::shared_lock lock(mutex);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate computation is harmless.
  auto value = make();
  std::unique_lock lock(mutex);
  auto [it, inserted] = map.emplace(key, value);
  return it->second;
}
}  // namespace

std::shared_ptr<const std::vector<double>> SpectrumCache::eigenvalues(Kind kind, int d, int M) {
  return lookup(mutex_, values_, Key{static_cast<int>(kind), d, M}, [&] {
    const Tridiagonal full = symmetrized_generator(build(kind, d));
    const Tridiagonal t = leading_block(full, M);
    return std::make_shared<const std::vector<double>>(numerics::tridiagonal_eigenvalues(t.diag, t.off));
  });
}

std::shared_ptr<const numerics::SymmetricEigensystem> SpectrumCache::eigensystem(Kind kind, int d) {
  return lookup(mutex_, systems_, Key{static_cast<int>(kind), d, d + 1}, [&] {
    const Tridiagonal t = symmetrized_generator(build(kind, d));
    return std::make_shared<const numerics::SymmetricEigensystem>(
        numerics::tridiagonal_eigensystem(t.diag, t.off));
  });
}

std::shared_ptr<const std::vector<std::pair<double, double>>> SpectrumCache::return_modes(Kind kind,
                                                                                        int d) {
  return lookup(mutex_, modes_, Key{static_cast<int>(kind), d, d + 1}, [&] {
    const Tridiagonal t = symmetrized_generator(build(kind, d));
    const auto values = eigenvalues(kind, d, d + 1);
    std::vector<std::pair<double, double>> out;
    out.reserve(values->size());
    for (double lam : *values)
      out.emplace_back(lam, numerics::twisted_first_component_log_sq(t.diag, t.off, lam));
    return std::make_shared<const std::vector<std::pair<double, double>>>(std::move(out));
  });
}

std::vector<double> kernel_row(const BirthDeathChain& c, int from, double t) {
  if (t < 0.0) throw ParameterError("kernel_row: negative time");
  if (from < 0 || from > c.d) throw ParameterError("kernel_row: state out of range");
  const std::size_t n = c.size();
  std::vector<double> row(n, 0.0);
  if (t == 0.0) {
    row[from] = 1.0;
    return row;
  }
  double rate = 0.0;
  for (std::size_t k = 0; k < n; ++k) rate = std::max(rate, c.birth[k] + c.death[k]);
  if (rate * t <= kUniformizationBudget) {
    // All terms are nonnegative, so small entries keep their relative accuracy.
    row[from] = 1.0;
    return numerics::uniformize(std::move(row), rate, t, 1e-15,
                                [&](const std::vector<double>& in, std::vector<double>& out) {
                                  out.assign(n, 0.0);
                                  for (std::size_t i = 0; i < n; ++i) {
                                    const double up = c.birth[i] / rate, down = c.death[i] / rate;
                                    out[i] += in[i] * (1.0 - up - down);
                                    if (i + 1 < n) out[i + 1] += in[i] * up;
                                    if (i > 0) out[i - 1] += in[i] * down;
                                  }
                                });
  }
  // Long times: spectral sum with the stationary mode put in exactly.
  const auto es = SpectrumCache::global().eigensystem(c.kind, c.d);
  std::vector<double> weight(n);
  for (std::size_t k = 1; k < n; ++k) weight[k] = std::exp(-es->values[k] * t) * es->vectors(from, k);
  for (std::size_t j = 0; j < n; ++j) {
    numerics::CompensatedSum s;
    for (std::size_t k = 1; k < n; ++k) s.add(weight[k] * es->vectors(j, k));
    row[j] = c.nu(static_cast<int>(j)) + std::exp(0.5 * (c.log_nu[j] - c.log_nu[from])) * s.value();
  }
  return row;
}

double p_return_closed_form(int d, double t) {
  return std::exp(static_cast<double>(d) * std::log(0.5 * (1.0 + std::exp(-2.0 * t))));
}

HypercubeL2 hypercube_avg_l2_exact(int d, double t) {
  check_d(d);
  if (t < 0.0) throw ParameterError("hypercube_avg_l2_exact: negative time");
  const double dl2 = static_cast<double>(d) * std::log(2.0);
  HypercubeL2 out;
  if (t == 0.0) {
    out.log_value = dl2 + std::log1p(-std::exp(-dl2));
    out.value = d < 1024 ? std::ldexp(1.0, d) - 1.0 : std::exp(out.log_value);
    return out;
  }
  const auto modes = SpectrumCache::global().return_modes(Kind::S, d);
  // Mode 0 (lambda = 0, v_0(0)^2 = nu(0) = 2^-d) contributes exactly the 1.
  std::vector<double> terms;
  terms.reserve(modes->size());
  for (std::size_t k = 1; k < modes->size(); ++k)
    terms.push_back(-(*modes)[k].first * t + (*modes)[k].second + dl2);
  out.log_value = numerics::log_sum_exp(terms);
  out.value = std::exp(out.log_value);
  return out;
}

double hypercube_crossing_time(int d, double level) {
  if (!(level > 0.0)) throw ParameterError("crossing level must be positive");
  auto f = [&](double t) { return hypercube_avg_l2_exact(d, t).log_value - std::log(level); };
  double lo = 0.0;
  double hi = 1.0;
  if (f(lo) <= 0.0) throw ParameterError("level is above the initial distance");
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw NumericalError("crossing time not bracketed");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> killed_eigenvalues(const BirthDeathChain& c, int M) {
  if (M < 1 || M > c.d) throw ParameterError("killed_eigenvalues needs 1 <= M <= d");
  return *SpectrumCache::global().eigenvalues(c.kind, c.d, M);
}

std::vector<double> hitting_time_law(const BirthDeathChain& c, int M) { return killed_eigenvalues(c, M); }

double sample_hitting(const std::vector<double>& rates, Rng& rng) {
  double t = 0.0;
  for (double r : rates) t += rng.exponential(r);
  return t;
}

double simulate_hitting(const BirthDeathChain& c, int M, Rng& rng) {
  if (M < 1 || M > c.d) throw ParameterError("simulate_hitting needs 1 <= M <= d");
  int k = 0;
  double t = 0.0;
  while (k < M) {
    const double up = c.birth[k];
    const double total = up + c.death[k];
    t += rng.exponential(total);
    k += (rng.uniform01() * total < up) ? 1 : -1;
  }
  return t;
}

double hardy_constant(int d, int M) {
  check_d(d);
  if (M < 1 || M > d / 2) throw ParameterError("hardy_constant needs 1 <= M <= d/2");
  const std::vector<double> log_nu = log_binomial_half(d);
  const std::vector<double> log_cum = log_cumulative(log_nu);
  // Suffix log-sums of 1/(nu(j)(d-j)) for j = k..M-1, built right to left.
  double best = -std::numeric_limits<double>::infinity();
  double suffix = -std::numeric_limits<double>::infinity();
  for (int k = M - 1; k >= 0; --k) {
    const double term = -log_nu[k] - std::log(static_cast<double>(d - k));
    const double a = std::max(suffix, term);
    suffix = a + std::log(std::exp(suffix - a) + std::exp(term - a));
    best = std::max(best, log_cum[k] + suffix);
  }
  return std::exp(best);
}

double gamma_k(int d, int k) {
  check_d(d);
  if (d % 2 != 0) throw ParameterError("gamma_k needs even d");
  if (k < 0 || k >= d / 2) throw ParameterError("gamma_k needs 0 <= k < d/2");
  const std::vector<double> log_nu = log_binomial_half(d);
  const std::vector<double> log_cum = log_cumulative(log_nu);
  std::vector<double> terms;
  for (int j = k; j < d / 2; ++j) terms.push_back(-log_nu[j]);
  const double log_sum = numerics::log_sum_exp(terms);
  return std::exp(log_cum[k] + log_sum) * (-log_cum[k]) / static_cast<double>(d);
}

Sandwich sandwich(int d, double t) {
  check_d(d);
  Sandwich s;
  s.p_t = p_return_closed_form(d, t);
  s.p_half_t = p_return_closed_form(d, 0.5 * t);
  s.s_t = kernel_row(build_s(d), 0, t)[0];
  return s;
}

}  // namespace avgproc::ehrenfest
