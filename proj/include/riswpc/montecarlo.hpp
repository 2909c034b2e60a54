#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "riswpc/channel.hpp"
#include "riswpc/config.hpp"
#include "riswpc/stats.hpp"

namespace riswpc {

/// A Monte Carlo point estimate.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

/// Sample mean and variance of the real part X = |f| + sum rho|g||h|cos(phi).
struct MomentEstimate {
  double mean = 0.0;
  double variance = 0.0;
  double mean_stderr = 0.0;
  double variance_stderr = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

/// Sample means of the signal term |h_p|^2 |X + jY|^2 and of the noise
/// term sigma_v^2 sum rho^2 |g|^2 + sigma_n^2.
struct ErgodicTermEstimate {
  Estimate signal;
  Estimate noise;
};

struct McOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

namespace mc {

/// Draws per chunk. Chunk k covers draws [k * kChunkSize, (k + 1) * kChunkSize).
inline constexpr std::int64_t kChunkSize = 8192;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of chunk k: splitmix64(seed + k * 0x9E3779B97F4A7C15).
inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed + chunk * 0x9E3779B97F4A7C15ULL);
}

/// Run `n` channel draws split into fixed chunks, each with its own Rng
/// seeded by chunk_seed. `visit(draw, acc)` folds one draw into a chunk-local
/// accumulator; chunk accumulators are merged with `Acc::merge` in chunk
/// order, so the result does not depend on the worker count.
template <class Acc, class Visit>
Acc run_chunked(const LinkParams& link, std::int64_t n, std::uint64_t seed, McOptions opts,
                Visit visit) {
  const std::int64_t chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<Acc> partial(static_cast<std::size_t>(chunks));
  std::atomic<std::int64_t> next{0};

  auto worker = [&] {
    ChannelDraw draw;
    for (std::int64_t k = next++; k < chunks; k = next++) {
      Rng rng(chunk_seed(seed, static_cast<std::uint64_t>(k)));
      const std::int64_t count = std::min(kChunkSize, n - k * kChunkSize);
      Acc& acc = partial[static_cast<std::size_t>(k)];
      for (std::int64_t i = 0; i < count; ++i) {
        sample_realization(link, rng, draw);
        visit(draw, acc);
      }
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, std::max<std::int64_t>(chunks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Acc total;
  for (const Acc& a : partial) total.merge(a);
  return total;
}

}  // namespace mc

/// Instantaneous SINR of one draw:
/// nu1 |h_p|^2 ((|f| + sum rho|g||h|cos phi)^2 + (sum rho|g||h|sin phi)^2)
///   / (sigma_v^2 sum rho^2 |g|^2 + sigma_n^2).
double simulate_sinr(const LinkParams& link, const ChannelDraw& draw, double alpha);
double simulate_sinr(const SystemConfig& cfg, const ChannelDraw& draw, double alpha);

/// Mean of (1 - alpha) log2(1 + SINR) over n draws. Requires n >= 100.
Estimate mc_ergodic_rate(const SystemConfig& cfg, double alpha, std::int64_t n, std::uint64_t seed,
                         McOptions opts = {});
/// Fraction of draws with (1 - alpha) log2(1 + SINR) < r_v. Requires n >= 100.
Estimate mc_outage(const SystemConfig& cfg, double alpha, std::int64_t n, std::uint64_t seed,
                   McOptions opts = {});
/// Requires n >= 1000.
MomentEstimate mc_moments_x(const SystemConfig& cfg, std::int64_t n, std::uint64_t seed,
                            McOptions opts = {});
ErgodicTermEstimate mc_ergodic_terms(const SystemConfig& cfg, std::int64_t n, std::uint64_t seed,
                                     McOptions opts = {});
/// Sample mean of instantaneous_power over n draws.
Estimate mc_expected_power(const SystemConfig& cfg, double alpha, std::int64_t n,
                           std::uint64_t seed, McOptions opts = {});

}  // namespace riswpc
