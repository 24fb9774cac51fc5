#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheb/bounds.hpp"
#include "cheb/perm_group.hpp"
#include "cheb/rational.hpp"

namespace cheb {

struct CatalogEntry {
  std::string name;
  std::string spec;
};

/// Soluble groups of order at most 200 used by the regression sweeps.
const std::vector<CatalogEntry>& soluble_catalog();
/// Insoluble groups for which the bound verdicts must be NOT_APPLICABLE.
const std::vector<CatalogEntry>& insoluble_catalog();

struct ExceptionalConstruction {
  CatalogEntry entry;
  int expected_case = 0;  // which small-parameter exception it realises
  /// Parameters of the factor the exception is about.
  std::uint64_t p = 0;
  std::size_t n_raw = 0;
};

/// Explicit groups realising each of the four small exceptional parameter
/// sets where the alpha ratio estimate is not strong enough on its own.
const std::vector<ExceptionalConstruction>& exceptional_constructions();

/// Probability that k uniform elements invariably generate G, by brute force:
/// a tuple's behaviour depends only on the conjugacy classes of its entries,
/// and for each class tuple every choice of conjugates is tested with plain
/// subgroup generation.
Rational brute_force_invariable_prob(const PermGroup& g, std::size_t k);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t mc_seeds = 50;
  std::uint64_t mc_trials = 100000;
};

/// Per-group bound evaluation shared by criteria 3, 4 and 9.
struct CatalogSweep {
  std::vector<BoundReport> reports;
  std::vector<std::string> errors;
  double seconds = 0;
};

CatalogSweep sweep_catalog();

CriterionResult criterion_exact_values();
CriterionResult criterion_elementary_sweep();
CriterionResult criterion_five_thirds(const CatalogSweep& sweep);
CriterionResult criterion_crown_bounds(const CatalogSweep& sweep);
CriterionResult criterion_exceptional_cases();
CriterionResult criterion_oracle_equivalence();
CriterionResult criterion_monte_carlo(const VerifyOptions& options = {});
CriterionResult criterion_binomial_tail();
CriterionResult criterion_v_property(const CatalogSweep& sweep);
CriterionResult criterion_frattini();

/// All ten criteria in order.
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& options = {});

}  // namespace cheb
