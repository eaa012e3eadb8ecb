#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "avgproc/rng.hpp"

namespace avgproc {

/// Monte Carlo settings shared by all replica-based estimators. Replica r is
/// driven by Rng::stream(seed, r), so results depend only on (seed, replicas).
struct MonteCarlo {
  std::size_t replicas = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Evaluates fn(r, rng_r) for r = 0..count-1 on up to `threads` workers and
/// returns the results in replica order.
template <class R, class F>
std::vector<R> run_replicas(const MonteCarlo& mc, F&& fn) {
  std::vector<R> out(mc.replicas);
  const unsigned workers = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(mc.threads == 0 ? 1 : mc.threads, mc.replicas)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= mc.replicas) return;
      try {
        Rng rng = Rng::stream(mc.seed, r);
        out[r] = fn(r, rng);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(mc.replicas);
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace avgproc
