#include "cheb/cheb_exact.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "cheb/error.hpp"
#include "cheb/gf.hpp"

namespace cheb {

namespace {

struct SignatureGroup {
  Bitset signature;
  std::size_t size = 0;
};

// Classes sharing a signature behave identically in every sieve computation.
std::vector<SignatureGroup> merge_signatures(const SieveSystem& s) {
  std::unordered_map<Bitset, std::size_t, BitsetHash> slot;
  std::vector<SignatureGroup> groups;
  for (std::size_t c = 0; c < s.class_signatures.size(); ++c) {
    auto [it, inserted] = slot.emplace(s.class_signatures[c], groups.size());
    if (inserted) groups.push_back({s.class_signatures[c], 0});
    groups[it->second].size += s.class_sizes[c];
  }
  return groups;
}

class LatticeChain {
 public:
  LatticeChain(const SieveSystem& s, std::size_t state_cap)
      : order_(s.group_order), groups_(merge_signatures(s)), cap_(state_cap) {}

  Rational expected(const Bitset& state) {
    if (state.none()) return 0;
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    std::size_t self = 0;
    Rational acc = Rational(order_);
    for (const auto& g : groups_) {
      Bitset next = state & g.signature;
      if (next == state) {
        self += g.size;
      } else if (!next.none()) {
        acc += Rational(g.size) * expected(next);
      }
    }
    if (self >= order_) throw std::logic_error("lattice chain: state cannot be left");
    Rational value = acc / Rational(order_ - self);
    if (memo_.size() >= cap_)
      throw Error(ErrorCode::StateCapExceeded, "intersection lattice exceeds " + std::to_string(cap_) + " states");
    memo_.emplace(state, value);
    return value;
  }

  const std::vector<SignatureGroup>& groups() const { return groups_; }

 private:
  std::size_t order_;
  std::vector<SignatureGroup> groups_;
  std::size_t cap_;
  std::unordered_map<Bitset, Rational, BitsetHash> memo_;
};

}  // namespace

SieveSystem build_sieves(const PermGroup& g, const std::vector<MaximalClassData>& maximals,
                         const std::vector<bool>& keep) {
  SieveSystem s;
  s.group_order = g.order();
  const auto classes = conjugacy_classes(g);
  s.class_of = classes.class_of;
  s.class_sizes = classes.sizes;

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < maximals.size(); ++i)
    if (keep[i]) candidates.push_back(i);
  for (std::size_t i : candidates) {
    const Bitset& u = maximals[i].union_bits;
    bool dominated = false;
    for (std::size_t j : candidates) {
      if (j == i) continue;
      const Bitset& w = maximals[j].union_bits;
      // equal unions: keep the first occurrence only
      if (u == w ? j < i : u.is_subset_of(w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      s.reduced_unions.push_back(u);
      s.source_class.push_back(i);
    }
  }

  const std::size_t r = s.reduced_unions.size();
  for (ElemIndex rep : classes.reps) {
    Bitset sig(r);
    for (std::size_t k = 0; k < r; ++k)
      if (s.reduced_unions[k].test(rep)) sig.set(k);
    s.class_signatures.push_back(std::move(sig));
  }
  return s;
}

SieveSystem build_sieves(const PermGroup& g, const std::vector<MaximalClassData>& maximals) {
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "no sieves for the trivial group");
  return build_sieves(g, maximals, std::vector<bool>(maximals.size(), true));
}

IntersectionProfile intersection_profile(const SieveSystem& s, std::size_t sieve_cap) {
  const std::size_t r = s.sieve_count();
  if (r > sieve_cap || r > 62)
    throw Error(ErrorCode::TooManySieves, std::to_string(r) + " sieves exceed the inclusion-exclusion cap of " +
                                              std::to_string(std::min<std::size_t>(sieve_cap, 62)));
  IntersectionProfile profile;
  profile.group_order = s.group_order;
  if (r == 0) return profile;

  const auto groups = merge_signatures(s);
  std::vector<std::uint64_t> sig(groups.size());
  std::vector<std::size_t> size(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    sig[i] = groups[i].signature.words().empty() ? 0 : groups[i].signature.words()[0];
    size[i] = groups[i].size;
  }
  // miss[i] = number of chosen sieves not containing group i
  std::vector<std::uint32_t> miss(groups.size(), 0);
  std::vector<std::int64_t> coefficient(s.group_order + 1, 0);
  std::size_t inside = s.group_order;  // elements in every chosen sieve
  std::uint64_t current = 0;
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    current ^= mask;
    if (current & mask) {
      for (std::size_t g = 0; g < sig.size(); ++g)
        if (!(sig[g] & mask) && miss[g]++ == 0) inside -= size[g];
    } else {
      for (std::size_t g = 0; g < sig.size(); ++g)
        if (!(sig[g] & mask) && --miss[g] == 0) inside += size[g];
    }
    coefficient[inside] += (std::popcount(current) & 1) ? 1 : -1;
  }
  for (std::size_t c = 0; c <= s.group_order; ++c)
    if (coefficient[c] != 0) profile.entries.push_back({c, coefficient[c]});
  return profile;
}

ChebValue chebotarev_exact(const SieveSystem& s, std::size_t sieve_cap) {
  const IntersectionProfile profile = intersection_profile(s, sieve_cap);
  ChebValue v;
  v.method = "inclusion-exclusion";
  v.sieve_count = s.sieve_count();
  v.exact = 0;
  for (const auto& e : profile.entries) {
    if (e.size >= s.group_order) throw std::logic_error("a sieve intersection covers the group");
    Rational value = Rational(e.coefficient) * Rational(s.group_order, s.group_order - e.size);
    v.exact += value;
    v.terms.push_back({e.size, e.coefficient, std::move(value)});
  }
  v.decimal = to_decimal(v.exact, 20);
  return v;
}

Rational chebotarev_lattice(const SieveSystem& s, std::size_t state_cap) {
  if (s.sieve_count() == 0) return 0;
  LatticeChain chain(s, state_cap);
  return chain.expected(Bitset(s.sieve_count(), true));
}

ChebValue chebotarev(const SieveSystem& s, std::size_t sieve_cap) {
  if (s.sieve_count() <= sieve_cap && s.sieve_count() <= 62) return chebotarev_exact(s, sieve_cap);
  ChebValue v;
  v.method = "lattice";
  v.sieve_count = s.sieve_count();
  v.exact = chebotarev_lattice(s);
  v.decimal = to_decimal(v.exact, 20);
  return v;
}

ChebValue chebotarev(const PermGroup& g, std::size_t sieve_cap) {
  if (g.is_trivial()) {
    ChebValue v;
    v.exact = 0;
    v.method = "trivial";
    v.decimal = to_decimal(v.exact, 20);
    return v;
  }
  return chebotarev(build_sieves(g, maximal_classes(g)), sieve_cap);
}

Rational invariable_gen_prob(const IntersectionProfile& profile, std::size_t k) {
  Rational trapped = 0;
  for (const auto& e : profile.entries) {
    Rational q(e.size, profile.group_order);
    Rational qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    trapped += Rational(e.coefficient) * qk;
  }
  return 1 - trapped;
}

Rational invariable_gen_prob(const SieveSystem& s, std::size_t k, std::size_t sieve_cap) {
  return invariable_gen_prob(intersection_profile(s, sieve_cap), k);
}

Rational invariable_gen_prob_lattice(const SieveSystem& s, std::size_t k, std::size_t state_cap) {
  if (s.sieve_count() == 0) return 1;
  const auto groups = merge_signatures(s);
  std::unordered_map<Bitset, Rational, BitsetHash> dist;
  dist.emplace(Bitset(s.sieve_count(), true), Rational(1));
  for (std::size_t step = 0; step < k; ++step) {
    std::unordered_map<Bitset, Rational, BitsetHash> next;
    for (const auto& [state, mass] : dist)
      for (const auto& g : groups) {
        Bitset to = state & g.signature;
        if (to.none()) continue;
        next[to] += mass * Rational(g.size, s.group_order);
      }
    if (next.size() > state_cap)
      throw Error(ErrorCode::StateCapExceeded, "intersection lattice exceeds state cap");
    dist = std::move(next);
  }
  Rational trapped = 0;
  for (const auto& [state, mass] : dist) trapped += mass;
  return 1 - trapped;
}

Rational v_property_sum(const SieveSystem& restricted, std::size_t sieve_cap) {
  if (restricted.sieve_count() == 0) return 0;
  return chebotarev(restricted, sieve_cap).exact;
}

Rational elementary_abelian_cheb(std::uint64_t p, std::size_t delta) {
  if (!gf::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  BigInt total = 1;
  for (std::size_t i = 0; i < delta; ++i) total *= p;
  Rational sum = 0;
  BigInt pi = 1;
  for (std::size_t i = 0; i < delta; ++i) {
    sum += Rational(total, total - pi);
    pi *= p;
  }
  return sum;
}

PermGroup frattini_reduce(const PermGroup& g) {
  if (g.is_trivial()) return g;
  return quotient(g, frattini(g)).group;
}

}  // namespace cheb
