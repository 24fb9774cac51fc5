#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cheb/cheb_mc.hpp"
#include "cheb/error.hpp"
#include "support.hpp"

using namespace cheb;
using testing::group;

namespace {

SieveSystem sieves(const char* spec) {
  const auto g = group(spec);
  return build_sieves(g, maximal_classes(g));
}

}  // namespace

TEST_SUITE("cheb_mc") {
  TEST_CASE("uniform_below stays in range and is roughly flat") {
    std::mt19937_64 rng(7);
    CHECK(uniform_below(rng, 1) == 0);
    std::vector<std::size_t> counts(6, 0);
    constexpr std::size_t draws = 60000;
    for (std::size_t i = 0; i < draws; ++i) {
      const auto x = uniform_below(rng, 6);
      REQUIRE(x < 6);
      ++counts[x];
    }
    // chi-square with 5 degrees of freedom; 20.5 is the 0.999 quantile
    double chi2 = 0;
    for (auto c : counts) chi2 += std::pow(static_cast<double>(c) - draws / 6.0, 2) / (draws / 6.0);
    CHECK(chi2 < 20.5);
    const std::uint64_t big = (std::uint64_t{1} << 63) + 12345;
    for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, big) < big);
  }

  TEST_CASE("same seed, same stream") {
    const auto s = sieves("symmetric 4");
    const auto a = mc_estimate(s, 5000, 42);
    const auto b = mc_estimate(s, 5000, 42);
    CHECK(a.mean == b.mean);
    CHECK(a.variance == b.variance);
    CHECK(a.max_waiting_time == b.max_waiting_time);
    const auto c = mc_estimate(s, 5000, 43);
    CHECK(a.mean != c.mean);
    CHECK(a.seed == 42);
    CHECK(a.trials == 5000);
  }

  TEST_CASE("estimates agree with the exact value") {
    for (const char* spec : {"cyclic 2", "elementary 2 2", "symmetric 3", "symmetric 4", "alternating 5",
                             "elementary 3 4"}) {
      INFO("spec: " << spec);
      const auto s = sieves(spec);
      const double exact = to_double(chebotarev(s).exact);
      const auto r = mc_estimate(s, 40000, 2024);
      const double se = std::sqrt(r.variance / r.trials);
      CHECK(std::fabs(r.mean - exact) < 5 * se);
      CHECK(r.ci95_lo < r.mean);
      CHECK(r.mean < r.ci95_hi);
      CHECK(r.max_waiting_time >= 1);
    }
  }

  TEST_CASE("C2 waiting time is geometric") {
    const auto r = mc_estimate(sieves("cyclic 2"), 50000, 5);
    // Geometric(1/2) on {1,2,...}: mean 2, variance 2
    CHECK(std::fabs(r.mean - 2) < 0.05);
    CHECK(std::fabs(r.variance - 2) < 0.1);
  }

  TEST_CASE("bad input") {
    auto s = sieves("elementary 2 2");
    CHECK_THROWS_AS(mc_estimate(s, 0, 1), std::invalid_argument);
    // a sieve that every class belongs to can never be escaped
    for (auto& sig : s.class_signatures) sig.set(0);
    try {
      mc_estimate(s, 1, 1);
      FAIL("expected TrialCapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TrialCapExceeded);
    }
  }
}
