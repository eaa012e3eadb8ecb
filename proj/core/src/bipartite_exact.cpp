#include "avgproc/bipartite_exact.hpp"

#include <algorithm>
#include <cmath>

#include "avgproc/errors.hpp"

namespace avgproc::bipartite {

namespace {

void check_mn(std::uint64_t m, std::uint64_t n) {
  if (n < 2) throw ParameterError("need n >= 2");
  if (m < 1 || 2 * m > n) throw ParameterError("need 1 <= m <= n/2");
}

void check_b(double b) {
  if (!(b >= 0.0 && b <= 0.5)) throw ParameterError("b must lie in [0, 1/2]");
}

int side_state(Part p) { return p == Part::C1 ? 0 : 1; }

}  // namespace

std::vector<int> LumpedChain::active_states() const {
  std::vector<int> out;
  for (int i = 0; i < kStates; ++i)
    if (active[i]) out.push_back(i);
  return out;
}

LumpedChain build(std::uint64_t m, std::uint64_t n) {
  check_mn(m, n);
  LumpedChain c;
  c.m = m;
  c.n = n;
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double k = nd - md;
  c.Q = {{{-3.0 * k / 4.0, k / 4.0, k / 2.0, 0.0, 0.0},
          {md / 4.0, -3.0 * md / 4.0, md / 2.0, 0.0, 0.0},
          {0.25, 0.25, -(nd - 1.0) / 2.0, (md - 1.0) / 2.0, (k - 1.0) / 2.0},
          {0.0, 0.0, k, -k, 0.0},
          {0.0, 0.0, md, 0.0, -md}}};
  const double n2 = nd * nd;
  c.mu = {md / n2, k / n2, 2.0 * md * k / n2, md * (md - 1.0) / n2, k * (k - 1.0) / n2};
  for (int i = 0; i < kStates; ++i) c.active[i] = c.mu[i] > 0.0;
  return c;
}

double detailed_balance_violation(const LumpedChain& c) {
  double worst = 0.0;
  for (int i : c.active_states())
    for (int j : c.active_states())
      worst = std::max(worst, std::abs(c.mu[i] * c.Q[i][j] - c.mu[j] * c.Q[j][i]));
  return worst;
}

namespace {

// U(-Q)U^{-1} on active states, symmetrized to remove rounding asymmetry.
numerics::DenseMatrix symmetrized(const LumpedChain& c, const std::vector<int>& act) {
  const std::size_t a = act.size();
  numerics::DenseMatrix s(a);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      const int si = act[i], sj = act[j];
      s(i, j) = -c.Q[si][sj] * std::sqrt(c.mu[si] / c.mu[sj]);
    }
  }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
  return s;
}

}  // namespace

SpectralDecomp decompose(const LumpedChain& c) {
  const std::vector<int> act = c.active_states();
  const numerics::DenseMatrix s = symmetrized(c, act);
  const auto es = numerics::jacobi_eigen(s, 1e-13);
  SpectralDecomp out;
  for (std::size_t k = 0; k < act.size(); ++k) {
    out.rho.push_back(es.values[k]);
    Vec5 phi{};
    // Fix the sign so that the first active entry is positive (phi_0 = 1).
    double sign = es.vectors(0, k) < 0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < act.size(); ++i)
      phi[act[i]] = sign * es.vectors(i, k) / std::sqrt(c.mu[act[i]]);
    out.phi.push_back(phi);
  }
  out.rho[0] = 0.0;  // exact by construction; removes rounding noise
  return out;
}

double eigenpair_residual(const LumpedChain& c, const Vec5& phi, double rho) {
  double worst = 0.0;
  for (int i : c.active_states()) {
    double r = 0.0;
    for (int j : c.active_states()) r -= c.Q[i][j] * phi[j];
    worst = std::max(worst, std::abs(r - rho * phi[i]));
  }
  return worst;
}

double spectral_residual(const LumpedChain& c, const SpectralDecomp& s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < s.rho.size(); ++k)
    worst = std::max(worst, eigenpair_residual(c, s.phi[k], s.rho[k]));
  return worst;
}

double orthonormality_defect(const LumpedChain& c, const SpectralDecomp& s) {
  double worst = 0.0;
  for (std::size_t a = 0; a < s.phi.size(); ++a) {
    for (std::size_t b = 0; b < s.phi.size(); ++b) {
      double ip = 0.0;
      for (int i : c.active_states()) ip += c.mu[i] * s.phi[a][i] * s.phi[b][i];
      worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Vec5 phi2(std::uint64_t m, std::uint64_t n) {
  check_mn(m, n);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double k = nd - md;
  const double scale = std::sqrt(2.0 * md / k);
  return {-k / md * scale, scale, -(nd - 2.0 * md) / (2.0 * md) * scale, -k / md * scale, scale};
}

Vec5 phi2_alternate_sign(std::uint64_t m, std::uint64_t n) {
  check_mn(m, n);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double k = nd - md;
  const double scale = 1.0 / std::sqrt(k);
  return {-k / md * scale, scale, (nd - 2.0 * md) / (2.0 * md) * scale, -k / md * scale, scale};
}

double explicit_eigenpair_residual(const LumpedChain& c) {
  return eigenpair_residual(c, phi2(c.m, c.n), 0.5 * static_cast<double>(c.n));
}

std::vector<double> mode_weights(const LumpedChain& c, const SpectralDecomp& s, Part start) {
  const int i = side_state(start);
  const double nd = static_cast<double>(c.n);
  std::vector<double> psi(s.rho.size());
  for (std::size_t k = 0; k < s.rho.size(); ++k) {
    const Vec5& f = s.phi[k];
    psi[k] = nd * f[i] * (f[0] * c.mu[0] + f[1] * c.mu[1]);
  }
  return psi;
}

double exact_l2(const LumpedChain& c, const SpectralDecomp& s, Part start, double t) {
  if (t < 0.0) throw ParameterError("exact_l2: negative time");
  if (t == 0.0) return static_cast<double>(c.n) - 1.0;
  const std::vector<double> psi = mode_weights(c, s, start);
  numerics::CompensatedSum sum;
  for (std::size_t k = 1; k < s.rho.size(); ++k) sum.add(std::exp(-s.rho[k] * t) * psi[k]);
  return sum.value();
}

double exact_l2(std::uint64_t m, std::uint64_t n, Part start, double t) {
  const LumpedChain c = build(m, n);
  return exact_l2(c, decompose(c), start, t);
}

double exact_l2_uniformized(const LumpedChain& c, Part start, double t) {
  if (t < 0.0) throw ParameterError("exact_l2: negative time");
  double lambda = 0.0;
  for (int i = 0; i < kStates; ++i) lambda = std::max(lambda, -c.Q[i][i]);
  std::vector<double> v(kStates, 0.0);
  v[side_state(start)] = 1.0;
  const auto law = numerics::uniformize(
      std::move(v), lambda, t, 1e-14, [&](const std::vector<double>& in, std::vector<double>& out) {
        out.assign(kStates, 0.0);
        for (int i = 0; i < kStates; ++i)
          for (int j = 0; j < kStates; ++j)
            out[j] += in[i] * ((i == j ? 1.0 : 0.0) + c.Q[i][j] / lambda);
      });
  return static_cast<double>(c.n) * (law[0] + law[1]) - 1.0;
}

double big_b(double b) {
  check_b(b);
  return std::sqrt(9.0 - 32.0 * b + 32.0 * b * b);
}

double big_c(double b) {
  check_b(b);
  // 4b/(3-B) rewritten with (3-B)(3+B) = 32 b (1-b); finite at b = 0.
  return (3.0 + big_b(b)) / (8.0 * (1.0 - b));
}

double big_d(double b) {
  check_b(b);
  const double bb = big_b(b);
  return (3.0 - 4.0 * b - bb) / (2.0 * bb);
}

double theta_of_b(double b) {
  if (!(b > 0.0 && b <= 0.5)) throw ParameterError("theta needs b in (0, 1/2]");
  const double x = 32.0 / 9.0 * b * (1.0 - b);
  const double root = std::sqrt(1.0 - x);
  const double one_minus = x < 1e-4 ? x / (1.0 + root) : 1.0 - root;
  return 3.0 / (8.0 * b) * one_minus;
}

double theta(std::uint64_t m, std::uint64_t n) {
  check_mn(m, n);
  return theta_of_b(static_cast<double>(m) / static_cast<double>(n));
}

double cutoff_time_l2(std::uint64_t m, std::uint64_t n, double a) {
  const double t = (std::log(static_cast<double>(n)) + a) / (theta(m, n) * static_cast<double>(m));
  if (!(t > 0.0)) throw ParameterError("cutoff time T(a) is not positive");
  return t;
}

double cutoff_time_l1(std::uint64_t m, std::uint64_t n, double a) {
  check_mn(m, n);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double t = nd / (2.0 * (nd - md)) * std::log2(nd) / md + a * std::sqrt(std::log(nd)) / md;
  if (!(t > 0.0)) throw ParameterError("cutoff time T(a) is not positive");
  return t;
}

double char_poly_q(std::uint64_t m, std::uint64_t n, double l) {
  check_mn(m, n);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  return -l * l * l + (7.0 * nd - 2.0) / 4.0 * l * l +
         (2.0 * md * md + (1.0 - 2.0 * md) * nd - 3.0 * nd * nd) / 4.0 * l +
         md * nd * (nd - md) / 2.0;
}

double rho1(std::uint64_t m, std::uint64_t n) {
  check_mn(m, n);
  const double center = theta(m, n) * static_cast<double>(m);
  double width = 10.0 / std::sqrt(static_cast<double>(n));
  double lo = 0.0, hi = 0.0;
  bool found = false;
  for (int attempt = 0; attempt <= 6; ++attempt, width *= 2.0) {
    lo = center * std::max(0.0, 1.0 - width);
    // The other roots are >= 2n/5, so capping there isolates the smallest.
    hi = std::min(center * (1.0 + width), 0.4 * static_cast<double>(n));
    if (char_poly_q(m, n, lo) * char_poly_q(m, n, hi) <= 0.0) {
      found = true;
      break;
    }
  }
  if (!found) throw NumericalError("rho1: no sign change of q in the search window");
  double qlo = char_poly_q(m, n, lo);
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    const double qm = char_poly_q(m, n, mid);
    if (qm == 0.0) return mid;
    if ((qm < 0.0) == (qlo < 0.0)) {
      lo = mid;
      qlo = qm;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  if (!(root < 0.4 * static_cast<double>(n))) throw NumericalError("rho1 is not below 2n/5");
  return root;
}

Profile profile(std::uint64_t m, std::uint64_t n, double a) {
  Profile p;
  p.t = cutoff_time_l2(m, n, a);
  p.exact = exact_l2(m, n, Part::C2, p.t);
  p.predicted = (1.0 + big_d(static_cast<double>(m) / static_cast<double>(n))) * std::exp(-a);
  p.ratio = p.exact / p.predicted;
  return p;
}

Blocks symmetrized_blocks(double b) {
  if (!(b > 0.0 && b <= 0.5)) throw ParameterError("symmetrized_blocks needs b in (0, 1/2]");
  const double s = std::sqrt(b * (1.0 - b));
  const double r2 = std::sqrt(2.0);
  Blocks out;
  out.s0 = numerics::DenseMatrix(2);
  out.s0(0, 0) = 0.75 * (1.0 - b);
  out.s0(0, 1) = out.s0(1, 0) = -0.25 * s;
  out.s0(1, 1) = 0.75 * b;
  out.s1 = numerics::DenseMatrix(3);
  out.s1(0, 0) = (1.0 - 2.0 * b) * (1.0 - 2.0 * b) / 2.0;
  out.s1(0, 1) = out.s1(1, 0) = -s * (1.0 + 2.0 * b) / r2;
  out.s1(0, 2) = out.s1(2, 0) = -s * (3.0 - 2.0 * b) / r2;
  out.s1(1, 1) = 1.0 - b * (1.0 + b);
  out.s1(1, 2) = out.s1(2, 1) = -b * (1.0 - b);
  out.s1(2, 2) = b * (3.0 - b) - 1.0;
  out.spec0 = numerics::jacobi_eigen(out.s0).values;
  out.spec1 = numerics::jacobi_eigen(out.s1).values;
  const double bb = big_b(b);
  const double want0[2] = {(3.0 - bb) / 8.0, (3.0 + bb) / 8.0};
  const double want1[3] = {-1.0, 0.5, 1.0};
  for (int i = 0; i < 2; ++i)
    if (std::abs(out.spec0[i] - want0[i]) > 1e-10) throw NumericalError("spec(S0) mismatch");
  for (int i = 0; i < 3; ++i)
    if (std::abs(out.spec1[i] - want1[i]) > 1e-10) throw NumericalError("spec(S1) mismatch");
  return out;
}

std::vector<double> rescaled_spectrum(std::uint64_t m, std::uint64_t n) {
  const LumpedChain c = build(m, n);
  const std::vector<int> act = c.active_states();
  numerics::DenseMatrix w = symmetrized(c, act);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < act.size(); ++i)
    for (std::size_t j = 0; j < act.size(); ++j)
      w(i, j) = w(i, j) / nd - std::sqrt(c.mu[act[i]] * c.mu[act[j]]);
  return numerics::jacobi_eigen(w).values;
}

}  // namespace avgproc::bipartite
