#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "avgproc/numerics.hpp"
#include "avgproc/rng.hpp"
#include "avgproc/stats.hpp"
#include "doctest.h"

using namespace avgproc;
using numerics::DenseMatrix;

namespace {
DenseMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = 2.0 * rng.uniform01() - 1.0;
  return a;
}
}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("jacobi matches Eigen on random symmetric matrices") {
    for (std::size_t n : {1u, 2u, 5u, 9u}) {
      const DenseMatrix a = random_symmetric(n, 100 + n);
      const auto es = numerics::jacobi_eigen(a);
      Eigen::MatrixXd m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(es.values[k] == doctest::Approx(ref.eigenvalues()(k)).epsilon(1e-12));
        // A v = lambda v
        for (std::size_t i = 0; i < n; ++i) {
          double av = 0.0;
          for (std::size_t j = 0; j < n; ++j) av += a(i, j) * es.vectors(j, k);
          CHECK(std::abs(av - es.values[k] * es.vectors(i, k)) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("tridiagonal QL matches Eigen") {
    Rng rng(5);
    const std::size_t n = 40;
    std::vector<double> d(n), e(n - 1);
    for (auto& x : d) x = 4.0 * rng.uniform01();
    for (auto& x : e) x = rng.uniform01() - 0.5;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = d[i];
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = e[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m);
    const auto vals = numerics::tridiagonal_eigenvalues(d, e);
    const auto sys = numerics::tridiagonal_eigensystem(d, e);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(vals[k] == doctest::Approx(ref.eigenvalues()(k)).epsilon(1e-12));
      CHECK(sys.values[k] == doctest::Approx(ref.eigenvalues()(k)).epsilon(1e-12));
      // First components agree with the twisted factorization.
      const double v0 = sys.vectors(0, k);
      const double lg = numerics::twisted_first_component_log_sq(d, e, sys.values[k]);
      CHECK(std::exp(lg) == doctest::Approx(v0 * v0).epsilon(1e-8));
    }
  }

  TEST_CASE("single-element and mismatched tridiagonal input") {
    const std::vector<double> d{3.0};
    const std::vector<double> e{};
    CHECK(numerics::tridiagonal_eigenvalues(d, e)[0] == 3.0);
    const std::vector<double> bad{1.0, 2.0};
    CHECK_THROWS(numerics::tridiagonal_eigenvalues(d, bad));
  }

  TEST_CASE("log_sum_exp and compensated sum") {
    const std::vector<double> xs{1000.0, 1000.0};
    CHECK(numerics::log_sum_exp(xs) == doctest::Approx(1000.0 + std::log(2.0)));
    std::vector<double> ys(1000000, 0.1);
    CHECK(numerics::compensated_sum(ys) == doctest::Approx(100000.0).epsilon(1e-15));
    CHECK(std::isinf(numerics::log_sum_exp(std::vector<double>{})));
  }

  TEST_CASE("Poisson window holds all but the tail") {
    for (double mean : {0.0, 0.3, 5.0, 120.0, 5000.0}) {
      const auto w = numerics::poisson_window(mean, 1e-12);
      const double mass = numerics::compensated_sum(w.weights);
      CHECK(mass <= 1.0 + 1e-12);
      CHECK(mass >= 1.0 - 1e-12);
    }
  }

  TEST_CASE("uniformization of a two-state chain") {
    // rates a: 0 -> 1, b: 1 -> 0
    const double a = 2.0, b = 0.5, t = 0.7;
    const double lambda = 2.0;
    auto step = [&](const std::vector<double>& v, std::vector<double>& out) {
      out = {v[0] * (1 - a / lambda) + v[1] * b / lambda, v[0] * a / lambda + v[1] * (1 - b / lambda)};
    };
    const auto p = numerics::uniformize({1.0, 0.0}, lambda, t, 1e-13, step);
    const double exact = b / (a + b) + a / (a + b) * std::exp(-(a + b) * t);
    CHECK(p[0] == doctest::Approx(exact).epsilon(1e-12));
  }

  TEST_CASE("adaptive Simpson") {
    auto f = [](double x) { return std::exp(-x) * std::sin(3 * x); };
    const double exact = (3.0 - std::exp(-2.0) * (3 * std::cos(6.0) + std::sin(6.0))) / 10.0;
    CHECK(std::abs(numerics::adaptive_simpson(f, 0.0, 2.0, 1e-10) - exact) < 1e-9);
  }

  TEST_CASE("rng conversions and streams") {
    Rng r = Rng::stream(42, 3);
    Rng s = Rng::stream(42, 3);
    for (int i = 0; i < 10; ++i) CHECK(r.next() == s.next());
    CHECK(hash64(42, 0) != hash64(42, 1));
    Rng u(9);
    double mean = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const auto k = u.index(7);
      REQUIRE(k < 7);
      mean += u.exponential(2.0);
    }
    CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.02));
  }

  TEST_CASE("estimate and KS helpers") {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const Estimate e = estimate(xs);
    CHECK(e.mean == 2.5);
    CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    CHECK(ks_statistic({1, 2, 3}, {1, 2, 3}) == 0.0);
    CHECK(ks_statistic({1, 2}, {3, 4}) == 1.0);
    CHECK(ks_critical_value(0.01, 10000, 10000) == doctest::Approx(1.6276 * std::sqrt(2e-4)).epsilon(1e-3));
  }
}
