#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace avgproc {

/// Sample mean with its standard error (sample sd / sqrt(count)).
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

/// Mean and standard error of `samples`, accumulated in index order with
/// compensated summation.
Estimate estimate(std::span<const double> samples);

/// |a - b| <= k * combined standard error (+ abs_slack).
bool within_sigma(double value, const Estimate& e, double k, double abs_slack = 0.0);

/// Two-sample Kolmogorov-Smirnov statistic sup|F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// Asymptotic two-sample critical value c(alpha) * sqrt((n+m)/(n m)) with
/// c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_critical_value(double alpha, std::size_t n, std::size_t m);

}  // namespace avgproc
