// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bell/rng.hpp"

namespace bell {

/// Monte Carlo mean of a binary (+-1) product with its standard error.
struct CorrelationEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sqrt((1 - mean^2) / n), the exact binary variance
  std::uint64_t n = 0;
};

/// Draws per Monte Carlo chunk. Chunk c of a job with base stream
/// (seed, s) consumes stream (seed, s + c), so callers that run several jobs
/// from one seed must space their base stream indices by at least the chunk
/// count (the CLI uses 2^32 per job).
inline constexpr std::uint64_t kMcChunkDraws = 65536;

namespace detail {

/// Sum of an integer-valued per-draw statistic over n draws, split into
/// fixed-size chunks with one substream each. Partial sums are exact
/// (integer accumulators) and the reduction runs in chunk order, so the
/// result is bit-identical for any worker count. Acc must value-initialize
/// to zero and support operator+=.
template <class Acc, class PerDraw>
Acc chunked_reduce(RngStream base, std::uint64_t n, unsigned threads, PerDraw&& per_draw) {
  const std::uint64_t num_chunks = (n + kMcChunkDraws - 1) / kMcChunkDraws;
  std::vector<Acc> partial(num_chunks);

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t begin = c * kMcChunkDraws;
    const std::uint64_t count = std::min(kMcChunkDraws, n - begin);
    Philox4x32 gen(RngStream{base.seed, base.stream_index + c});
    Acc sum{};
    for (std::uint64_t i = 0; i < count; ++i) {
      sum += per_draw(gen);
    }
    partial[c] = sum;
  };

  if (threads <= 1 || num_chunks <= 1) {
    for (std::uint64_t c = 0; c < num_chunks; ++c) run_chunk(c);
  } else {
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, num_chunks));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < num_chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  Acc total{};
  for (std::uint64_t c = 0; c < num_chunks; ++c) total += partial[c];
  return total;
}

template <class PerDraw>
std::int64_t chunked_sum(RngStream base, std::uint64_t n, unsigned threads, PerDraw&& per_draw) {
  return chunked_reduce<std::int64_t>(base, n, threads, per_draw);
}

inline CorrelationEstimate estimate_from_sum(std::int64_t sum, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("Monte Carlo estimate requires n >= 1");
  }
  const double mean = static_cast<double>(sum) / static_cast<double>(n);
  const double variance = std::max(0.0, 1.0 - mean * mean);
  return {mean, std::sqrt(variance / static_cast<double>(n)), n};
}

}  // namespace detail

}  // namespace bell
