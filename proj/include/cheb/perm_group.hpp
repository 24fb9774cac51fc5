#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cheb/bitset.hpp"
#include "cheb/perm.hpp"

namespace cheb {

/// Position of an element in a group's element table.
using ElemIndex = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 20000;
/// Groups up to this order carry a full multiplication table.
inline constexpr std::size_t kMultiplicationTableCap = 2048;

/// A finite permutation group with its full element table.
///
/// Elements are indexed in first-discovery order of a breadth-first closure
/// that starts at the identity (index 0) and multiplies on the right by the
/// sorted, deduplicated generator list. Immutable after construction.
class PermGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElemIndex>& generator_indices() const { return generator_indices_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElemIndex i) const { return elements_[i]; }
  static constexpr ElemIndex identity() { return 0; }

  std::optional<ElemIndex> index_of(const Permutation& p) const;

  ElemIndex mul(ElemIndex a, ElemIndex b) const;
  ElemIndex inv(ElemIndex a) const { return inverse_[a]; }
  /// x^-1 a x
  ElemIndex conj(ElemIndex a, ElemIndex x) const { return mul(mul(inverse_[x], a), x); }
  /// a^-1 b^-1 a b
  ElemIndex commutator(ElemIndex a, ElemIndex b) const {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  std::size_t element_order(ElemIndex a) const;

  Bitset empty_set() const { return Bitset(order()); }
  Bitset full_set() const { return Bitset(order(), true); }

 private:
  friend PermGroup build_group(std::size_t, const std::vector<Permutation>&, std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElemIndex> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElemIndex, PermutationHash> index_;
  std::vector<ElemIndex> inverse_;
  std::shared_ptr<const std::vector<ElemIndex>> table_;
};

/// Closure of `generators` under composition. Throws DegreeMismatch or
/// OrderCapExceeded.
PermGroup build_group(std::size_t degree, const std::vector<Permutation>& generators,
                      std::size_t order_cap = kDefaultOrderCap);

/// A subgroup as a bitset over the parent's element table, with a small
/// generating set.
struct Subgroup {
  Bitset members;
  std::size_t order = 0;
  std::vector<ElemIndex> generators;

  bool contains(ElemIndex e) const { return members.test(e); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

Subgroup trivial_subgroup(const PermGroup& g);
Subgroup whole_group(const PermGroup& g);
Subgroup generate(const PermGroup& g, const std::vector<ElemIndex>& gens);
/// <h, x>, reusing h's elements.
Subgroup extend(const PermGroup& g, const Subgroup& h, ElemIndex x);
/// Recovers a generating set for a bitset known to be a subgroup.
Subgroup subgroup_from_bits(const PermGroup& g, const Bitset& bits);

Bitset conjugate_set(const PermGroup& g, const Bitset& bits, ElemIndex x);
bool is_normal(const PermGroup& g, const Subgroup& h);
/// Smallest subgroup containing `seed` and normalised by `within`'s generators.
Subgroup normal_closure(const PermGroup& g, const std::vector<ElemIndex>& within,
                        const std::vector<ElemIndex>& seed);
Subgroup derived_subgroup(const PermGroup& g, const Subgroup& h);
bool is_abelian(const PermGroup& g, const Subgroup& h);

struct ConjClassTable {
  std::vector<std::uint32_t> class_of;
  std::vector<ElemIndex> reps;
  std::vector<std::size_t> sizes;

  std::size_t count() const { return reps.size(); }
};

ConjClassTable conjugacy_classes(const PermGroup& g);

bool is_soluble(const PermGroup& g);

struct Quotient {
  PermGroup group;
  /// element index in G -> element index in G/N
  std::vector<ElemIndex> epimorphism;
};

/// Action of G on the right cosets of N. Throws NotNormal.
Quotient quotient(const PermGroup& g, const Subgroup& n);

/// { g : [g, x] in Y for all x in X } for a section X/Y of normal subgroups.
/// Throws BadSection.
Subgroup section_centralizer(const PermGroup& g, const Subgroup& x, const Subgroup& y);

}  // namespace cheb
