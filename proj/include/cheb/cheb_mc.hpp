#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cheb/cheb_exact.hpp"

namespace cheb {

inline constexpr std::uint64_t kMaxDrawsPerTrial = 1000000;

struct McReport {
  std::uint64_t trials = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance of the waiting time
  double ci95_lo = 0;
  double ci95_hi = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_waiting_time = 0;
};

/// Uniform draw from [0, bound) by rejection on the raw 64-bit output, so the
/// stream of draws depends only on the engine and not on the standard
/// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Simulates the waiting time until the sampled elements escape every sieve.
///
/// One std::mt19937_64 stream seeded with `seed` drives all trials in order.
/// Throws TrialCapExceeded if a trial needs more than kMaxDrawsPerTrial draws.
McReport mc_estimate(const SieveSystem& s, std::uint64_t trials, std::uint64_t seed);

}  // namespace cheb
