#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "avgproc/numerics.hpp"
#include "avgproc/rng.hpp"

namespace avgproc::ehrenfest {

enum class Kind { P, S };

/// Birth-death chain on {0..d} with binomial stationary law.
struct BirthDeathChain {
  Kind kind = Kind::P;
  int d = 0;
  std::vector<double> birth;   // p_k
  std::vector<double> death;   // q_k
  std::vector<double> log_nu;  // log nu(k), nu = Binomial(d, 1/2)

  std::size_t size() const { return birth.size(); }
  double nu(int k) const;
  /// max_k |nu(k) p_k - nu(k+1) q_{k+1}| / max(nu(k) p_k, tiny), relative.
  double detailed_balance_violation() const;
};

/// Ehrenfest urn: p_k = d - k, q_k = k. 1 <= d <= 2000.
BirthDeathChain build_p(int d);
/// Perturbed urn: as P except p_0 = d/2 and q_1 = 1/2.
BirthDeathChain build_s(int d);
BirthDeathChain build(Kind kind, int d);

/// Diagonal and off-diagonal of diag(sqrt nu) (-L) diag(sqrt nu)^{-1}.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};
Tridiagonal symmetrized_generator(const BirthDeathChain& c);

/// Row `from` of e^{tL}.
std::vector<double> kernel_row(const BirthDeathChain& c, int from, double t);

/// ((1 + e^{-2t})/2)^d, the P-chain return probability.
double p_return_closed_form(int d, double t);

struct HypercubeL2 {
  double value = 0.0;      // may be +inf when it exceeds binary64 range
  double log_value = 0.0;  // natural log of value
};

/// 2^d S_t(0,0) - 1, the mean squared L^2 distance of the averaging process
/// on the d-hypercube started from a Dirac mass.
HypercubeL2 hypercube_avg_l2_exact(int d, double t);

/// Time at which hypercube_avg_l2_exact crosses `level` (bisection).
double hypercube_crossing_time(int d, double level);

/// Eigenvalues (ascending) of -L killed on leaving {0..M-1}; 1 <= M <= d.
std::vector<double> killed_eigenvalues(const BirthDeathChain& c, int M);

/// Exponential rates whose independent sum is the hitting time of M from 0.
std::vector<double> hitting_time_law(const BirthDeathChain& c, int M);
double sample_hitting(const std::vector<double>& rates, Rng& rng);
/// Direct simulation of the chain from 0 until it first reaches M.
double simulate_hitting(const BirthDeathChain& c, int M, Rng& rng);

/// C_M = max_{0<=k<M} nu([0,k]) sum_{j=k}^{M-1} 1/(nu(j)(d-j)); 1 <= M <= d/2.
double hardy_constant(int d, int M);
/// Gamma(k) = (1/d) nu([0,k]) log(1/nu([0,k])) sum_{j=k}^{d/2-1} 1/nu(j).
double gamma_k(int d, int k);

struct Sandwich {
  double p_t = 0.0;       // P_t(0,0)
  double s_t = 0.0;       // S_t(0,0)
  double p_half_t = 0.0;  // P_{t/2}(0,0)
  bool holds(double slack) const { return p_t <= s_t + slack && s_t <= p_half_t + slack; }
};
Sandwich sandwich(int d, double t);

/// Read-mostly cache of spectra keyed by (kind, d, M); M = d + 1 stands for
/// the full chain. Safe for concurrent use.
class SpectrumCache {
 public:
  static SpectrumCache& global();

  std::shared_ptr<const std::vector<double>> eigenvalues(Kind kind, int d, int M);
  /// Full eigensystem of the symmetrized generator (for kernel rows).
  std::shared_ptr<const numerics::SymmetricEigensystem> eigensystem(Kind kind, int d);
  /// Pairs (lambda_k, log v_k(0)^2) for the full S or P chain.
  std::shared_ptr<const std::vector<std::pair<double, double>>> return_modes(Kind kind, int d);

  void clear();

 private:
  using Key = std::tuple<int, int, int>;
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const std::vector<double>>> values_;
  std::map<Key, std::shared_ptr<const numerics::SymmetricEigensystem>> systems_;
  std::map<Key, std::shared_ptr<const std::vector<std::pair<double, double>>>> modes_;
};

}  // namespace avgproc::ehrenfest
