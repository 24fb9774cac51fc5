#pragma once

#include <cstddef>
#include <vector>

#include "cheb/perm_group.hpp"

namespace cheb {

inline constexpr std::size_t kSubgroupEnumerationCap = 2000;

/// Every subgroup of a desk-scale group, found by cyclic extension.
///
/// Subgroups are ordered by order, then lexicographically by member bitset.
class SubgroupLattice {
 public:
  /// Throws OrderCapExceeded when |G| exceeds `order_cap`.
  explicit SubgroupLattice(const PermGroup& g, std::size_t order_cap = kSubgroupEnumerationCap);

  const PermGroup& group() const { return *group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<Subgroup>& normal_subgroups() const { return normal_; }
  /// One generator per cyclic subgroup.
  const std::vector<ElemIndex>& cyclic_generators() const { return cyclic_generators_; }

 private:
  const PermGroup* group_;
  std::vector<Subgroup> subgroups_;
  std::vector<Subgroup> normal_;
  std::vector<ElemIndex> cyclic_generators_;
};

std::vector<Subgroup> all_subgroups(const PermGroup& g,
                                    std::size_t order_cap = kSubgroupEnumerationCap);

/// One conjugacy class of maximal subgroups.
struct MaximalClassData {
  Subgroup representative;
  std::size_t class_size = 0;
  /// Union of all G-conjugates of the representative.
  Bitset union_bits;
  /// Intersection of all G-conjugates.
  Bitset core_bits;
};

/// Throws TrivialGroup for |G| = 1.
std::vector<MaximalClassData> maximal_classes(const SubgroupLattice& lattice);
std::vector<MaximalClassData> maximal_classes(const PermGroup& g);

Subgroup frattini(const PermGroup& g, const std::vector<MaximalClassData>& classes);
Subgroup frattini(const PermGroup& g);

/// Throws TrivialGroup for |G| = 1.
std::vector<Subgroup> minimal_normal_subgroups(const SubgroupLattice& lattice);
std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g);

/// Normal subgroups of G that contain `below` properly and are minimal with
/// that property, i.e. the pullbacks of the minimal normal subgroups of
/// G/below.
std::vector<Subgroup> minimal_normal_over(const SubgroupLattice& lattice, const Bitset& below);

/// Minimal number of generators d(G); 0 for the trivial group.
std::size_t min_generators(const PermGroup& g);

}  // namespace cheb
