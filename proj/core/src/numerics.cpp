#include "avgproc/numerics.hpp"

#include <algorithm>
#include <cfloat>
#include <limits>
#include <numeric>

#include "avgproc/errors.hpp"

namespace avgproc::numerics {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

void sort_eigensystem(std::vector<double>& values, DenseMatrix* vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> sorted(n);
  for (std::size_t k = 0; k < n; ++k) sorted[k] = values[order[k]];
  values = std::move(sorted);
  if (vectors != nullptr) {
    DenseMatrix v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) v(i, k) = (*vectors)(i, order[k]);
    *vectors = std::move(v);
  }
}

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Implicit QL on a symmetric tridiagonal matrix (EISPACK tql2 layout:
// e[i] couples d[i] and d[i+1], e[n-1] is scratch).
void tql(std::vector<double>& d, std::vector<double>& e, DenseMatrix* z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  double f = 0.0;
  double tst1 = 0.0;
  const double eps = DBL_EPSILON;
  const int max_iter = 60 + 30 * static_cast<int>(n);
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iter) throw NumericalError("tridiagonal QL did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          const std::size_t i = ii;
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (z != nullptr) {
            for (std::size_t k = 0; k < n; ++k) {
              h = (*z)(k, i + 1);
              (*z)(k, i + 1) = s * (*z)(k, i) + c * h;
              (*z)(k, i) = c * (*z)(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

void check_tridiagonal(std::span<const double> diag, std::span<const double> off) {
  if (diag.empty()) throw ParameterError("empty tridiagonal matrix");
  if (off.size() + 1 != diag.size())
    throw ParameterError("off-diagonal length must be one less than the diagonal");
}

}  // namespace

SymmetricEigensystem jacobi_eigen(const DenseMatrix& input, double off_tol) {
  const std::size_t n = input.size();
  DenseMatrix a = input;
  DenseMatrix v = DenseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * (1.0 + std::abs(a(i, j))))
        throw ParameterError("jacobi_eigen: matrix is not symmetric");

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(a) > off_tol) {
    if (++sweep > kMaxSweeps) throw NumericalError("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  SymmetricEigensystem out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  out.vectors = std::move(v);
  sort_eigensystem(out.values, &out.vectors);
  return out;
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off) {
  check_tridiagonal(diag, off);
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(off.begin(), off.end());
  e.push_back(0.0);
  tql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

SymmetricEigensystem tridiagonal_eigensystem(std::span<const double> diag,
                                             std::span<const double> off) {
  check_tridiagonal(diag, off);
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(off.begin(), off.end());
  e.push_back(0.0);
  DenseMatrix z = DenseMatrix::identity(d.size());
  tql(d, e, &z);
  SymmetricEigensystem out{std::move(d), std::move(z)};
  sort_eigensystem(out.values, &out.vectors);
  return out;
}

double twisted_first_component_log_sq(std::span<const double> diag,
                                      std::span<const double> off, double lambda) {
  check_tridiagonal(diag, off);
  const std::size_t n = diag.size();
  if (n == 1) return 0.0;

  double scale = 0.0;
  for (double x : diag) scale = std::max(scale, std::abs(x));
  for (double x : off) scale = std::max(scale, 2.0 * std::abs(x));
  // Exact eigenvalues can produce exactly vanishing pivots.
  const double tiny = DBL_EPSILON * std::max(scale, 1.0) * 1e-3;
  auto guard = [tiny](double x) { return std::abs(x) < tiny ? (x < 0 ? -tiny : tiny) : x; };

  std::vector<double> fwd(n), bwd(n);
  fwd[0] = guard(diag[0] - lambda);
  for (std::size_t j = 1; j < n; ++j)
    fwd[j] = guard(diag[j] - lambda - off[j - 1] * off[j - 1] / fwd[j - 1]);
  bwd[n - 1] = guard(diag[n - 1] - lambda);
  for (std::size_t j = n - 1; j-- > 0;)
    bwd[j] = guard(diag[j] - lambda - off[j] * off[j] / bwd[j + 1]);

  std::size_t r = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double gamma = std::abs(fwd[j] + bwd[j] - (diag[j] - lambda));
    if (gamma < best) {
      best = gamma;
      r = j;
    }
  }

  std::vector<double> lx(n);
  lx[r] = 0.0;
  for (std::size_t j = r; j-- > 0;)
    lx[j] = lx[j + 1] + std::log(std::abs(off[j])) - std::log(std::abs(fwd[j]));
  for (std::size_t j = r + 1; j < n; ++j)
    lx[j] = lx[j - 1] + std::log(std::abs(off[j - 1])) - std::log(std::abs(bwd[j]));

  std::vector<double> twice(n);
  for (std::size_t j = 0; j < n; ++j) twice[j] = 2.0 * lx[j];
  return 2.0 * lx[0] - log_sum_exp(twice);
}

double compensated_sum(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

double log_sum_exp(std::span<const double> xs) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double x : xs) mx = std::max(mx, x);
  if (!std::isfinite(mx)) return mx;
  CompensatedSum s;
  for (double x : xs) s.add(std::exp(x - mx));
  return mx + std::log(s.value());
}

PoissonWindow poisson_window(double mean, double tail_tol) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw ParameterError("Poisson mean must be finite and >= 0");
  if (!(tail_tol > 0.0)) throw ParameterError("Poisson tail tolerance must be positive");
  PoissonWindow w;
  if (mean == 0.0) {
    w.weights = {1.0};
    return w;
  }
  const auto mode = static_cast<std::size_t>(std::floor(mean));
  // Weights relative to the mode by the ratio recurrence, normalized at the
  // end; lgamma only sets the scale used by the stopping rule.
  const double md = static_cast<double>(mode);
  const double scale = std::exp(-mean + md * std::log(mean) - std::lgamma(md + 1.0));
  const double half = 0.5 * tail_tol;

  // Right tail: past the mode successive ratios mean/(k+1) are < 1, so the
  // remaining mass is bounded by a geometric series.
  std::vector<double> right{1.0};
  for (std::size_t k = mode;; ++k) {
    const double ratio = mean / static_cast<double>(k + 1);
    if (ratio < 1.0 && scale * right.back() * ratio / (1.0 - ratio) <= half) break;
    right.push_back(right.back() * ratio);
  }
  std::vector<double> left;
  std::size_t first = mode;
  double cur = 1.0;
  while (first > 0) {
    const double ratio = static_cast<double>(first) / mean;
    if (ratio < 1.0 && scale * cur * ratio / (1.0 - ratio) <= half) break;
    cur *= ratio;
    --first;
    left.push_back(cur);
  }
  w.first = first;
  w.weights.assign(left.rbegin(), left.rend());
  w.weights.insert(w.weights.end(), right.begin(), right.end());
  const double total = compensated_sum(w.weights);
  for (double& x : w.weights) x /= total;
  return w;
}

std::vector<double> uniformize(
    std::vector<double> v, double rate, double t, double tail_tol,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>& step) {
  if (t < 0.0) throw ParameterError("uniformize: negative time");
  if (t == 0.0 || rate == 0.0) return v;
  const PoissonWindow w = poisson_window(rate * t, tail_tol);
  std::vector<double> acc(v.size(), 0.0);
  std::vector<double> next(v.size());
  for (std::size_t k = 0; k <= w.last(); ++k) {
    if (k >= w.first) {
      const double wk = w.weights[k - w.first];
      for (std::size_t i = 0; i < v.size(); ++i) acc[i] += wk * v[i];
    }
    if (k == w.last()) break;
    step(v, next);
    std::swap(v, next);
  }
  return acc;
}

}  // namespace avgproc::numerics
