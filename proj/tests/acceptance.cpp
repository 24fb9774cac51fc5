// Runs the ten acceptance criteria and prints one line per criterion.
#include <cstdio>

#include "cheb/verify.hpp"

int main() {
  cheb::VerifyOptions options;
  options.mc_seeds = 50;
  options.mc_trials = 100000;
  const auto results = cheb::run_all_criteria(options);
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-40s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? 0 : 1;
}
