#pragma once

// Dense and tridiagonal eigensolvers, Poisson weights for uniformization,
// compensated summation and adaptive quadrature. Everything here is small and
// self-contained; the heavier modules build on these primitives.

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace avgproc::numerics {

/// Row-major square matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigensystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k is the unit eigenvector of values[k]
};

/// Cyclic Jacobi rotations on a symmetric matrix. Iterates until the
/// off-diagonal Frobenius norm drops below `off_tol` (or to exact zero).
SymmetricEigensystem jacobi_eigen(const DenseMatrix& a, double off_tol = 1e-13);

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `off` (off.size() == diag.size() - 1), by implicit
/// QL iteration.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off);

/// Full eigensystem of a symmetric tridiagonal matrix by implicit QL.
SymmetricEigensystem tridiagonal_eigensystem(std::span<const double> diag,
                                             std::span<const double> off);

/// log of v[0]^2 where v is the unit eigenvector for eigenvalue `lambda` of the
/// tridiagonal matrix, computed from a twisted factorization so that the
/// component keeps full relative accuracy even when it is far below machine
/// epsilon in absolute terms.
double twisted_first_component_log_sq(std::span<const double> diag,
                                      std::span<const double> off, double lambda);

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

/// log(sum_i exp(xs[i])); returns -inf for an empty input.
double log_sum_exp(std::span<const double> xs);

/// Poisson(mean) probabilities on the index window [first, first + weights.size())
/// chosen so that the mass outside the window is below `tail_tol`.
struct PoissonWindow {
  std::size_t first = 0;
  std::vector<double> weights;
  std::size_t last() const { return first + weights.size() - 1; }
};

PoissonWindow poisson_window(double mean, double tail_tol);

/// Uniformization: returns sum_k Poisson(rate*t)[k] * step^k(v), where `step`
/// applies the stochastic matrix I + L/rate (in whichever orientation the
/// caller needs). Truncation error is below `tail_tol` times the sup norm of v.
std::vector<double> uniformize(
    std::vector<double> v, double rate, double t, double tail_tol,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>& step);

namespace detail {
template <class F>
double simpson_recurse(const F& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature with absolute tolerance `tol`.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int max_depth = 20) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace avgproc::numerics
