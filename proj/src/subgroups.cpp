#include "cheb/subgroups.hpp"

#include <algorithm>
#include <unordered_set>

#include "cheb/error.hpp"

namespace cheb {

namespace {

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.members < b.members;
}

std::vector<ElemIndex> cyclic_subgroup_generators(const PermGroup& g) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<ElemIndex> gens;
  for (ElemIndex e = 1; e < g.order(); ++e) {
    Subgroup c = generate(g, {e});
    if (seen.insert(c.members).second) gens.push_back(e);
  }
  return gens;
}

}  // namespace

SubgroupLattice::SubgroupLattice(const PermGroup& g, std::size_t order_cap) : group_(&g) {
  if (g.order() > order_cap)
    throw Error(ErrorCode::OrderCapExceeded, "subgroup enumeration needs |G| <= " +
                                                 std::to_string(order_cap) + ", got " +
                                                 std::to_string(g.order()));
  cyclic_generators_ = cyclic_subgroup_generators(g);

  std::unordered_set<Bitset, BitsetHash> seen;
  subgroups_.push_back(trivial_subgroup(g));
  seen.insert(subgroups_.back().members);
  for (ElemIndex z : cyclic_generators_) {
    subgroups_.push_back(generate(g, {z}));
    seen.insert(subgroups_.back().members);
  }
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i].order == g.order()) continue;
    for (ElemIndex z : cyclic_generators_) {
      if (subgroups_[i].contains(z)) continue;
      Subgroup k = extend(g, subgroups_[i], z);
      if (seen.insert(k.members).second) subgroups_.push_back(std::move(k));
    }
  }
  std::sort(subgroups_.begin(), subgroups_.end(), canonical_less);
  for (const auto& h : subgroups_)
    if (is_normal(g, h)) normal_.push_back(h);
}

std::vector<Subgroup> all_subgroups(const PermGroup& g, std::size_t order_cap) {
  return SubgroupLattice(g, order_cap).subgroups();
}

std::vector<MaximalClassData> maximal_classes(const SubgroupLattice& lattice) {
  const PermGroup& g = lattice.group();
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "the trivial group has no maximal subgroups");
  const auto& subs = lattice.subgroups();

  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order == g.order()) continue;
    bool is_max = true;
    for (std::size_t j = i + 1; j < subs.size() && is_max; ++j) {
      const auto& t = subs[j];
      if (t.order == g.order() || t.order == subs[i].order || t.order % subs[i].order != 0) continue;
      if (subs[i].members.is_subset_of(t.members)) is_max = false;
    }
    if (is_max) maximal.push_back(i);
  }

  std::vector<MaximalClassData> classes;
  std::vector<bool> assigned(subs.size(), false);
  for (std::size_t i : maximal) {
    if (assigned[i]) continue;
    std::unordered_set<Bitset, BitsetHash> conjugates;
    for (ElemIndex x = 0; x < g.order(); ++x)
      conjugates.insert(conjugate_set(g, subs[i].members, x));
    MaximalClassData data{subs[i], conjugates.size(), g.empty_set(), g.full_set()};
    for (const auto& c : conjugates) {
      data.union_bits |= c;
      data.core_bits &= c;
    }
    for (std::size_t j : maximal)
      if (conjugates.count(subs[j].members) != 0) assigned[j] = true;
    if (data.union_bits.all())
      throw std::logic_error("conjugate union of a maximal subgroup covers the group");
    classes.push_back(std::move(data));
  }
  return classes;
}

std::vector<MaximalClassData> maximal_classes(const PermGroup& g) {
  return maximal_classes(SubgroupLattice(g));
}

Subgroup frattini(const PermGroup& g, const std::vector<MaximalClassData>& classes) {
  if (g.is_trivial()) return trivial_subgroup(g);
  Bitset bits = g.full_set();
  for (const auto& c : classes) bits &= c.core_bits;
  return subgroup_from_bits(g, bits);
}

Subgroup frattini(const PermGroup& g) {
  if (g.is_trivial()) return trivial_subgroup(g);
  return frattini(g, maximal_classes(g));
}

std::vector<Subgroup> minimal_normal_over(const SubgroupLattice& lattice, const Bitset& below) {
  std::vector<const Subgroup*> above;
  for (const auto& n : lattice.normal_subgroups())
    if (below.is_subset_of(n.members) && !(n.members == below)) above.push_back(&n);
  std::vector<Subgroup> out;
  for (const Subgroup* n : above) {
    const bool minimal = std::none_of(above.begin(), above.end(), [&](const Subgroup* m) {
      return m->order < n->order && m->members.is_subset_of(n->members);
    });
    if (minimal) out.push_back(*n);
  }
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const SubgroupLattice& lattice) {
  const PermGroup& g = lattice.group();
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "the trivial group has no minimal normal subgroups");
  return minimal_normal_over(lattice, trivial_subgroup(g).members);
}

std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g) {
  return minimal_normal_subgroups(SubgroupLattice(g));
}

std::size_t min_generators(const PermGroup& g) {
  if (g.is_trivial()) return 0;
  // Level k holds the distinct subgroups generated by k elements, the first
  // taken up to conjugacy and the rest up to the cyclic subgroup they generate.
  const auto classes = conjugacy_classes(g);
  const auto cyclic = cyclic_subgroup_generators(g);
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Subgroup> level;
  for (ElemIndex r : classes.reps) {
    Subgroup c = generate(g, {r});
    if (c.order == g.order()) return 1;
    if (seen.insert(c.members).second) level.push_back(std::move(c));
  }
  for (std::size_t k = 2;; ++k) {
    std::vector<Subgroup> next;
    for (const auto& s : level)
      for (ElemIndex z : cyclic) {
        if (s.contains(z)) continue;
        Subgroup t = extend(g, s, z);
        if (t.order == g.order()) return k;
        if (seen.insert(t.members).second) next.push_back(std::move(t));
      }
    if (next.empty()) throw std::logic_error("min_generators: search exhausted without generating G");
    level = std::move(next);
  }
}

}  // namespace cheb
