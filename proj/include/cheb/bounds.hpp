#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cheb/chief.hpp"
#include "cheb/rational.hpp"

namespace cheb {

/// The constant sigma = 2.118456563... bounding the expected number of
/// draws beyond d(G) needed to generate an abelian group.
inline constexpr std::string_view kSigmaText = "2.118456563";
Rational sigma();
/// sigma rounded up in its last digit; used wherever sigma enters a bound.
Rational sigma_upper();

enum class Verdict { Satisfied, Violated, NotApplicable };
std::string_view verdict_name(Verdict v);

/// Upper bound on C(G) for soluble G from the complemented chief factors:
///   sum_{V in A} min{(delta theta + q/(q-1)) |V|, (ceil(delta theta / n) + q^n/(q^n-1)) |H_V|}
///   + max_{V in B} delta_V + sigma.
Rational crown_bound(const std::vector<ChiefFactorModule>& a,
                        const std::vector<ChiefFactorModule>& b);

/// d(G) * sum_{V in A} (1 + q^n |H_V| / (q^n - 1)) + sigma.
Rational generator_bound(const std::vector<ChiefFactorModule>& a, std::size_t d);

struct AlphaInputs {
  std::uint64_t q = 2;
  std::size_t n = 1;
  std::size_t delta = 1;
  std::size_t h_order = 1;
  Rational p_fix = 1;
  std::optional<std::size_t> m;

  static AlphaInputs from(const ChiefFactorModule& v);
  std::uint64_t module_order() const;  // q^n
};

struct AlphaValue {
  std::optional<Rational> branch1;  // needs m
  std::optional<Rational> branch2;  // absent when H = 1
  Rational value;
};

/// Elementary-abelian generation sum when H = 1, otherwise the minimum of
///   (delta theta + m + q/(q-1)) / p_fix   and
///   (ceil(delta theta / n) + q^n/(q^n-1)) |H|.
AlphaValue alpha_u(const AlphaInputs& v);

struct AlphaRatioResult {
  Rational alpha;
  Rational lambda;  // |G| / (|H| |V|^delta)
  double ratio = 0;      // alpha / sqrt|G|
  double threshold = 0;  // (5/3)(sqrt|U| - 1)/sqrt|U|, |U| = |V|^delta
  bool passes = false;
  std::optional<int> exceptional_case;
};

/// Compares alpha_U / sqrt|G| with (5/3)(sqrt|U|-1)/sqrt|U|. A failure that
/// matches none of the four small exceptional parameter sets throws
/// Error(UnexpectedException).
AlphaRatioResult alpha_ratio_check(const AlphaInputs& v, const BigInt& group_order);

struct BinomialTail {
  Rational partial_sum;
  Rational bound;  // 1/p
  bool ok = false;
};

/// sum_{k=l}^{K} C(k,l) p^l (1-p)^(k-l) against 1/p. Throws BadProbability.
BinomialTail binomial_tail_check(std::size_t l, const Rational& p, std::size_t k_max);

/// exact < (5/3) sqrt(order), or equality for the Klein four-group, decided
/// in squared rational form.
Verdict five_thirds_check(const Rational& exact, std::uint64_t order, bool is_klein);

/// Smallest rational >= (5/3) sqrt(order) on a 10^-15 grid.
Rational five_thirds_upper(std::uint64_t order);

struct FactorAlpha {
  std::string label;
  AlphaValue alpha;
};

struct BoundReport {
  std::string group_id;
  std::uint64_t order = 0;
  bool soluble = false;
  std::optional<Rational> exact;
  std::size_t d = 0;
  Rational crown_bound;
  Rational generator_bound;
  /// True when A is empty; the generator bound is then checked as d(G) + sigma.
  bool generator_bound_fallback = false;
  Rational v_property_bound;
  Rational five_thirds_bound;
  std::vector<FactorAlpha> per_factor;
  Verdict crown = Verdict::NotApplicable;
  Verdict generators = Verdict::NotApplicable;
  Verdict five_thirds = Verdict::NotApplicable;
  Verdict v_property = Verdict::NotApplicable;

  bool any_violated() const;
};

struct BoundOptions {
  std::size_t sieve_cap = 24;
  std::size_t series_variant = 0;
};

/// Computes C(G) and every bound for one group.
BoundReport evaluate_bounds(const PermGroup& g, const std::string& label, const BoundOptions& options = {});

bool is_klein_four(const PermGroup& g);

}  // namespace cheb
