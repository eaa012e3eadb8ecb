#include "avgproc/stats.hpp"

#include <algorithm>
#include <cmath>

#include "avgproc/errors.hpp"
#include "avgproc/numerics.hpp"

namespace avgproc {

Estimate estimate(std::span<const double> samples) {
  Estimate e;
  e.count = samples.size();
  if (samples.empty()) return e;
  e.mean = numerics::compensated_sum(samples) / static_cast<double>(samples.size());
  if (samples.size() < 2) return e;
  numerics::CompensatedSum ss;
  for (double x : samples) ss.add((x - e.mean) * (x - e.mean));
  const double var = ss.value() / static_cast<double>(samples.size() - 1);
  e.std_error = std::sqrt(var / static_cast<double>(samples.size()));
  return e;
}

bool within_sigma(double value, const Estimate& e, double k, double abs_slack) {
  return std::abs(value - e.mean) <= k * e.std_error + abs_slack;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ParameterError("KS statistic needs two nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_value(double alpha, std::size_t n, std::size_t m) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("KS alpha must be in (0,1)");
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return c * std::sqrt((nd + md) / (nd * md));
}

}  // namespace avgproc
