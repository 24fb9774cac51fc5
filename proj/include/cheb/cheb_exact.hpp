#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cheb/bitset.hpp"
#include "cheb/perm_group.hpp"
#include "cheb/rational.hpp"
#include "cheb/subgroups.hpp"

namespace cheb {

inline constexpr std::size_t kDefaultSieveCap = 24;
inline constexpr std::size_t kLatticeStateCap = std::size_t{1} << 20;

/// The conjugate-unions of maximal subgroups after deduplication and
/// containment reduction, with per-conjugacy-class membership signatures.
///
/// A tuple of elements fails to invariably generate G exactly when every
/// entry lies in one common reduced union.
struct SieveSystem {
  std::size_t group_order = 0;
  std::vector<Bitset> reduced_unions;
  /// Index of the maximal class each reduced union was taken from.
  std::vector<std::size_t> source_class;
  /// Element -> conjugacy class.
  std::vector<std::uint32_t> class_of;
  std::vector<std::size_t> class_sizes;
  /// Per conjugacy class: which reduced unions contain it (size r).
  std::vector<Bitset> class_signatures;

  std::size_t sieve_count() const { return reduced_unions.size(); }
  Rational class_weight(std::size_t c) const { return Rational(class_sizes[c], group_order); }
};

/// Throws TrivialGroup.
SieveSystem build_sieves(const PermGroup& g, const std::vector<MaximalClassData>& maximals);
/// Restricts to the maximal classes with `keep[i]` set; may be empty.
SieveSystem build_sieves(const PermGroup& g, const std::vector<MaximalClassData>& maximals,
                         const std::vector<bool>& keep);

/// Inclusion-exclusion coefficients grouped by intersection size: the sum
/// over nonempty T of (-1)^(|T|+1) [|∩T| = size].
struct IntersectionProfile {
  std::size_t group_order = 0;
  struct Entry {
    std::size_t size = 0;
    std::int64_t coefficient = 0;
  };
  std::vector<Entry> entries;
};

/// Gray-code walk over all 2^r subsets. Throws TooManySieves when r > cap.
IntersectionProfile intersection_profile(const SieveSystem& s, std::size_t sieve_cap = kDefaultSieveCap);

struct ChebValue {
  Rational exact;
  std::string decimal;  // 20 significant digits
  std::string method;   // "inclusion-exclusion" or "lattice"
  std::size_t sieve_count = 0;
  /// Inclusion-exclusion terms aggregated by q_T = size/|G|: each entry is
  /// coefficient * 1/(1 - q_T). Empty for the lattice method.
  struct Term {
    std::size_t intersection_size = 0;
    std::int64_t coefficient = 0;
    Rational value;
  };
  std::vector<Term> terms;
};

/// Exact C(G) by inclusion-exclusion over the sieves. Throws TooManySieves.
ChebValue chebotarev_exact(const SieveSystem& s, std::size_t sieve_cap = kDefaultSieveCap);

/// Exact C(G) as the expected absorption time of the chain on intersections
/// of class signatures. No limit on r; throws StateCapExceeded when the
/// intersection semilattice is larger than `state_cap`.
Rational chebotarev_lattice(const SieveSystem& s, std::size_t state_cap = kLatticeStateCap);

/// Inclusion-exclusion when r <= sieve_cap, otherwise the lattice method.
ChebValue chebotarev(const SieveSystem& s, std::size_t sieve_cap = kDefaultSieveCap);
/// C(G) from scratch; 0 for the trivial group.
ChebValue chebotarev(const PermGroup& g, std::size_t sieve_cap = kDefaultSieveCap);

/// P_I(G, k): probability that k uniform elements invariably generate.
Rational invariable_gen_prob(const SieveSystem& s, std::size_t k,
                             std::size_t sieve_cap = kDefaultSieveCap);
Rational invariable_gen_prob(const IntersectionProfile& profile, std::size_t k);
/// Same quantity by propagating the lattice chain k steps.
Rational invariable_gen_prob_lattice(const SieveSystem& s, std::size_t k,
                                     std::size_t state_cap = kLatticeStateCap);

/// Sum over k of P*_{G,V}(k) for a system restricted to Omega_{G,V}; 0 when
/// the restriction is empty.
Rational v_property_sum(const SieveSystem& restricted, std::size_t sieve_cap = kDefaultSieveCap);

/// Sum_{i<delta} p^delta / (p^delta - p^i). Throws NotPrime.
Rational elementary_abelian_cheb(std::uint64_t p, std::size_t delta);

/// G / Frattini(G).
PermGroup frattini_reduce(const PermGroup& g);

}  // namespace cheb
