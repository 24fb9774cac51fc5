#include "cheb/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "cheb/error.hpp"

namespace cheb {

std::optional<ElemIndex> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemIndex PermGroup::mul(ElemIndex a, ElemIndex b) const {
  if (table_) return (*table_)[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t PermGroup::element_order(ElemIndex a) const {
  std::size_t n = 1;
  for (ElemIndex x = a; x != identity(); x = mul(x, a)) ++n;
  return n;
}

PermGroup build_group(std::size_t degree, const std::vector<Permutation>& generators,
                      std::size_t order_cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : generators) {
    if (s.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "generator " + s.to_cycles() + " has degree " +
                                                 std::to_string(s.degree()) + ", expected " +
                                                 std::to_string(degree));
    if (!s.is_identity()) g.generators_.push_back(s);
  }
  std::sort(g.generators_.begin(), g.generators_.end());
  g.generators_.erase(std::unique(g.generators_.begin(), g.generators_.end()), g.generators_.end());

  g.elements_.push_back(Permutation::identity(degree));
  g.index_.emplace(g.elements_.front(), 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : g.generators_) {
      Permutation next = g.elements_[i] * s;
      if (g.index_.count(next) != 0) continue;
      if (g.elements_.size() >= order_cap)
        throw Error(ErrorCode::OrderCapExceeded,
                    "group order exceeds cap " + std::to_string(order_cap));
      g.index_.emplace(next, static_cast<ElemIndex>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
    }
  }
  for (const auto& s : g.generators_) g.generator_indices_.push_back(g.index_.at(s));

  const std::size_t n = g.elements_.size();
  g.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverse_[i] = g.index_.at(g.elements_[i].inverse());

  if (n <= kMultiplicationTableCap) {
    auto table = std::make_shared<std::vector<ElemIndex>>(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        (*table)[a * n + b] = g.index_.at(g.elements_[a] * g.elements_[b]);
    g.table_ = std::move(table);
  }
  return g;
}

Subgroup trivial_subgroup(const PermGroup& g) {
  Subgroup h{g.empty_set(), 1, {}};
  h.members.set(PermGroup::identity());
  return h;
}

Subgroup whole_group(const PermGroup& g) {
  return Subgroup{g.full_set(), g.order(), g.generator_indices()};
}

Subgroup extend(const PermGroup& g, const Subgroup& h, ElemIndex x) {
  if (h.contains(x)) return h;
  // <h, x> is a union of right cosets h*w; close the coset representatives
  // under right multiplication by the generators.
  const std::vector<std::size_t> base = h.members.to_indices();
  Subgroup out{h.members, 0, h.generators};
  out.generators.push_back(x);
  std::vector<ElemIndex> reps{PermGroup::identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (ElemIndex s : out.generators) {
      const ElemIndex y = g.mul(reps[r], s);
      if (out.members.test(y)) continue;
      for (std::size_t e : base) out.members.set(g.mul(static_cast<ElemIndex>(e), y));
      reps.push_back(y);
    }
  }
  out.order = base.size() * reps.size();
  return out;
}

Subgroup generate(const PermGroup& g, const std::vector<ElemIndex>& gens) {
  Subgroup h = trivial_subgroup(g);
  for (ElemIndex x : gens) h = extend(g, h, x);
  return h;
}

Subgroup subgroup_from_bits(const PermGroup& g, const Bitset& bits) {
  Subgroup h = trivial_subgroup(g);
  bits.for_each([&](std::size_t e) {
    if (!h.contains(static_cast<ElemIndex>(e))) h = extend(g, h, static_cast<ElemIndex>(e));
  });
  if (!(h.members == bits)) throw std::logic_error("subgroup_from_bits: bitset is not a subgroup");
  return h;
}

Bitset conjugate_set(const PermGroup& g, const Bitset& bits, ElemIndex x) {
  Bitset out = g.empty_set();
  bits.for_each([&](std::size_t e) { out.set(g.conj(static_cast<ElemIndex>(e), x)); });
  return out;
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (ElemIndex s : g.generator_indices())
    for (ElemIndex w : h.generators)
      if (!h.contains(g.conj(w, s))) return false;
  return true;
}

Subgroup normal_closure(const PermGroup& g, const std::vector<ElemIndex>& within,
                        const std::vector<ElemIndex>& seed) {
  Subgroup h = trivial_subgroup(g);
  std::deque<ElemIndex> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    const ElemIndex e = pending.front();
    pending.pop_front();
    if (h.contains(e)) continue;
    h = extend(g, h, e);
    for (ElemIndex w : within) pending.push_back(g.conj(e, w));
  }
  return h;
}

Subgroup derived_subgroup(const PermGroup& g, const Subgroup& h) {
  std::vector<ElemIndex> seed;
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j)
      seed.push_back(g.commutator(h.generators[i], h.generators[j]));
  return normal_closure(g, h.generators, seed);
}

bool is_abelian(const PermGroup& g, const Subgroup& h) {
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j)
      if (g.mul(h.generators[i], h.generators[j]) != g.mul(h.generators[j], h.generators[i]))
        return false;
  return true;
}

ConjClassTable conjugacy_classes(const PermGroup& g) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  ConjClassTable t;
  t.class_of.assign(g.order(), kUnset);
  for (ElemIndex e = 0; e < g.order(); ++e) {
    if (t.class_of[e] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(t.reps.size());
    t.reps.push_back(e);
    std::vector<ElemIndex> orbit{e};
    t.class_of[e] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElemIndex s : g.generator_indices()) {
        const ElemIndex c = g.conj(orbit[i], s);
        if (t.class_of[c] == kUnset) {
          t.class_of[c] = id;
          orbit.push_back(c);
        }
      }
    t.sizes.push_back(orbit.size());
  }
  return t;
}

bool is_soluble(const PermGroup& g) {
  Subgroup d = whole_group(g);
  while (d.order > 1) {
    Subgroup next = derived_subgroup(g, d);
    if (next.order == d.order) return false;
    d = std::move(next);
  }
  return true;
}

Quotient quotient(const PermGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g.order(), kUnset);
  std::vector<ElemIndex> reps;
  const auto n_elems = n.members.to_indices();
  for (ElemIndex e = 0; e < g.order(); ++e) {
    if (coset_of[e] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
    for (std::size_t x : n_elems) coset_of[g.mul(static_cast<ElemIndex>(x), e)] = c;
  }
  auto action = [&](ElemIndex x) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) images[c] = coset_of[g.mul(reps[c], x)];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (ElemIndex s : g.generator_indices()) gens.push_back(action(s));
  Quotient q{build_group(reps.size(), gens, g.order() + 1), {}};

  // Pushes the homomorphism along a breadth-first spanning tree of G.
  q.epimorphism.assign(g.order(), kUnset);
  q.epimorphism[PermGroup::identity()] = PermGroup::identity();
  std::vector<ElemIndex> gen_images;
  for (const auto& p : gens) gen_images.push_back(*q.group.index_of(p));
  std::vector<ElemIndex> frontier{PermGroup::identity()};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const ElemIndex e = frontier[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const ElemIndex next = g.mul(e, g.generator_indices()[k]);
      if (q.epimorphism[next] != kUnset) continue;
      q.epimorphism[next] = q.group.mul(q.epimorphism[e], gen_images[k]);
      frontier.push_back(next);
    }
  }
  return q;
}

Subgroup section_centralizer(const PermGroup& g, const Subgroup& x, const Subgroup& y) {
  if (!y.members.is_subset_of(x.members))
    throw Error(ErrorCode::BadSection, "Y is not contained in X");
  if (!is_normal(g, x) || !is_normal(g, y))
    throw Error(ErrorCode::BadSection, "section terms must be normal in G");
  Bitset bits = g.empty_set();
  for (ElemIndex e = 0; e < g.order(); ++e) {
    const bool centralizes = std::all_of(x.generators.begin(), x.generators.end(),
                                         [&](ElemIndex w) { return y.contains(g.commutator(e, w)); });
    if (centralizes) bits.set(e);
  }
  return subgroup_from_bits(g, bits);
}

}  // namespace cheb
