#pragma once

#include <cstdint>
#include <random>

namespace avgproc {

/// splitmix64 finalizer applied to master + (r+1)*golden; used to derive
/// independent replica streams from one master seed.
std::uint64_t hash64(std::uint64_t master, std::uint64_t r);

/// Thin wrapper over std::mt19937_64 with explicitly specified conversions so
/// that sampled values do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream number `r` of master seed `master`.
  static Rng stream(std::uint64_t master, std::uint64_t r) { return Rng(hash64(master, r)); }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), unbiased (Lemire's method). n must be > 0.
  std::uint64_t index(std::uint64_t n);

  /// Exp(rate) variate.
  double exponential(double rate);

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace avgproc
