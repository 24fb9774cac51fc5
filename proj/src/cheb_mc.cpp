#include "cheb/cheb_mc.hpp"

#include <cmath>
#include <limits>

#include "cheb/error.hpp"

namespace cheb {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // largest multiple of bound representable, minus one
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

namespace {

template <typename Mask, typename Intersect, typename IsEmpty>
McReport run_trials(const SieveSystem& s, const std::vector<Mask>& element_masks, Mask all,
                    std::uint64_t trials, std::uint64_t seed, Intersect intersect, IsEmpty is_empty) {
  std::mt19937_64 rng(seed);
  McReport report;
  report.trials = trials;
  report.seed = seed;
  // Welford accumulation
  double mean = 0, m2 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Mask alive = all;
    std::uint64_t draws = 0;
    while (!is_empty(alive)) {
      if (++draws > kMaxDrawsPerTrial)
        throw Error(ErrorCode::TrialCapExceeded, "trial did not terminate; sieve system is inconsistent");
      intersect(alive, element_masks[uniform_below(rng, s.group_order)]);
    }
    if (draws > report.max_waiting_time) report.max_waiting_time = draws;
    const double x = static_cast<double>(draws);
    const double delta = x - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (x - mean);
  }
  report.mean = mean;
  report.variance = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
  const double half = 1.96 * std::sqrt(report.variance / static_cast<double>(trials));
  report.ci95_lo = mean - half;
  report.ci95_hi = mean + half;
  return report;
}

}  // namespace

McReport mc_estimate(const SieveSystem& s, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("mc_estimate: trials must be positive");
  const std::size_t r = s.sieve_count();
  if (r == 0) throw Error(ErrorCode::TrivialGroup, "no sieves to escape");
  if (r <= 64) {
    std::vector<std::uint64_t> masks(s.group_order);
    for (std::size_t e = 0; e < s.group_order; ++e) masks[e] = s.class_signatures[s.class_of[e]].words()[0];
    const std::uint64_t all = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    return run_trials(
        s, masks, all, trials, seed, [](std::uint64_t& a, std::uint64_t m) { a &= m; },
        [](std::uint64_t a) { return a == 0; });
  }
  std::vector<Bitset> masks(s.group_order);
  for (std::size_t e = 0; e < s.group_order; ++e) masks[e] = s.class_signatures[s.class_of[e]];
  return run_trials(
      s, masks, Bitset(r, true), trials, seed, [](Bitset& a, const Bitset& m) { a &= m; },
      [](const Bitset& a) { return a.none(); });
}

}  // namespace cheb
