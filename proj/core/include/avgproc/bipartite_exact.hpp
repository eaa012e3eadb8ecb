#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "avgproc/graph.hpp"
#include "avgproc/numerics.hpp"

namespace avgproc::bipartite {

/// Lumped pair states of the coupled walk on K_{m,n-m}:
/// 0: both particles on one C1 vertex, 1: both on one C2 vertex,
/// 2: on opposite sides, 3: distinct C1 vertices, 4: distinct C2 vertices.
inline constexpr int kStates = 5;
using Vec5 = std::array<double, kStates>;
using Mat5 = std::array<Vec5, kStates>;

struct LumpedChain {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  Mat5 Q{};
  Vec5 mu{};
  std::array<bool, kStates> active{};
  std::vector<int> active_states() const;
};

/// Requires 1 <= m <= n/2.
LumpedChain build(std::uint64_t m, std::uint64_t n);

/// max |mu_i Q_ij - mu_j Q_ji| over active i, j.
double detailed_balance_violation(const LumpedChain& c);

/// Eigenpairs of -Q on the active states; phi[k] is L^2(mu)-orthonormal and
/// zero on inactive states. rho[0] = 0, ascending.
struct SpectralDecomp {
  std::vector<double> rho;
  std::vector<Vec5> phi;
};

SpectralDecomp decompose(const LumpedChain& c);

/// Residual max |(-Q phi - rho phi)(i)| over active states, and the
/// orthonormality defect, for a decomposition.
double spectral_residual(const LumpedChain& c, const SpectralDecomp& s);
double orthonormality_defect(const LumpedChain& c, const SpectralDecomp& s);

/// The eigenfunction of -Q for rho = n/2, L^2(mu)-normalized:
/// sqrt(2m/(n-m)) * (-(n-m)/m, 1, -(n-2m)/(2m), -(n-m)/m, 1).
Vec5 phi2(std::uint64_t m, std::uint64_t n);
/// The same vector with +(n-2m)/(2m) in the middle entry and prefactor
/// (n-m)^{-1/2}; it is an eigenvector only when n = 2m.
Vec5 phi2_alternate_sign(std::uint64_t m, std::uint64_t n);

/// max over active states of |(-Q phi2)(i) - (n/2) phi2(i)|.
double explicit_eigenpair_residual(const LumpedChain& c);
double eigenpair_residual(const LumpedChain& c, const Vec5& phi, double rho);

/// E ||eta_t/pi - 1||_2^2 for a Dirac start on the given side.
double exact_l2(std::uint64_t m, std::uint64_t n, Part start, double t);
double exact_l2(const LumpedChain& c, const SpectralDecomp& s, Part start, double t);

/// Same quantity by uniformization of Q (independent path, for checks).
double exact_l2_uniformized(const LumpedChain& c, Part start, double t);

/// Per-mode contributions Psi_k so that exact_l2 = sum_{k>=1} e^{-rho_k t} Psi_k.
std::vector<double> mode_weights(const LumpedChain& c, const SpectralDecomp& s, Part start);

double theta(std::uint64_t m, std::uint64_t n);
double theta_of_b(double b);
double big_b(double b);
double big_c(double b);
double big_d(double b);

/// (ln n + a)/(theta m); throws ParameterError when the result is <= 0.
double cutoff_time_l2(std::uint64_t m, std::uint64_t n, double a);
/// n/(2(n-m)) log2(n)/m + a sqrt(ln n)/m; throws when <= 0.
double cutoff_time_l1(std::uint64_t m, std::uint64_t n, double a);

/// The cubic whose roots are the eigenvalues of -Q other than 0 and n/2.
double char_poly_q(std::uint64_t m, std::uint64_t n, double lambda);
/// Smallest positive eigenvalue of -Q, by bisection on char_poly_q.
double rho1(std::uint64_t m, std::uint64_t n);

struct Profile {
  double exact = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  double t = 0.0;
};

/// exact_l2 at T(a) from a C2 start against (1 + D(m/n)) e^{-a}.
Profile profile(std::uint64_t m, std::uint64_t n, double a);

struct Blocks {
  numerics::DenseMatrix s0;
  numerics::DenseMatrix s1;
  std::vector<double> spec0;  // ascending
  std::vector<double> spec1;
};

/// Limiting blocks of the rescaled symmetrized generator. Throws
/// NumericalError if their spectra differ from {(3 -+ B)/8} and {-1, 1/2, 1}
/// by more than 1e-10.
Blocks symmetrized_blocks(double b);

/// Eigenvalues (ascending) of (1/n) U(-Q)U^{-1} - sqrt(mu) sqrt(mu)^T on the
/// active states, U = diag(sqrt(mu)).
std::vector<double> rescaled_spectrum(std::uint64_t m, std::uint64_t n);

}  // namespace avgproc::bipartite
