#include <doctest.h>

#include <random>
#include <set>

#include "cheb/error.hpp"
#include "cheb/perm_group.hpp"
#include "support.hpp"

using namespace cheb;
using testing::group;

namespace {

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// conjugacy classes straight from the permutation products
std::multiset<std::size_t> naive_class_sizes(const PermGroup& g) {
  std::set<Permutation> done;
  std::multiset<std::size_t> sizes;
  for (const auto& a : g.elements()) {
    if (done.count(a)) continue;
    std::set<Permutation> cls;
    for (const auto& x : g.elements()) cls.insert(x.inverse() * a * x);
    done.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

}  // namespace

TEST_SUITE("perm_core") {
  TEST_CASE("composition applies the left factor first") {
    const auto a = Permutation::from_cycles("(1,2)", 3);
    const auto b = Permutation::from_cycles("(2,3)", 3);
    const auto ab = a * b;
    // 1 -> 2 under a, then 2 -> 3 under b
    CHECK(ab[0] == 2);
    CHECK(ab == Permutation::from_cycles("(1,3,2)", 3));
    CHECK((a * a).is_identity());
  }

  TEST_CASE("cycle notation round trip and order") {
    const auto p = Permutation::from_cycles("(1,2,3)(4,5)", 6);
    CHECK(p.order() == 6);
    CHECK(Permutation::from_cycles(p.to_cycles(), 6) == p);
    CHECK(Permutation::from_cycles("(1 2 3)(4 5)", 6) == p);
    CHECK(Permutation::from_cycles("()", 4).is_identity());
    CHECK((p * p.inverse()).is_identity());
  }

  TEST_CASE("malformed permutations are rejected") {
    CHECK_THROWS_AS(Permutation::from_cycles("(1,2", 3), Error);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,4)", 3), Error);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,2,1)", 3), Error);
    CHECK_THROWS_AS(Permutation::from_cycles("(0,1)", 3), Error);
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
    try {
      build_group(3, {Permutation::from_cycles("(1,2)", 4)});
      FAIL("expected DegreeMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeMismatch);
    }
  }

  TEST_CASE("standard group orders") {
    CHECK(group("symmetric 4").order() == 24);
    CHECK(group("symmetric 5").order() == 120);
    CHECK(group("alternating 5").order() == 60);
    CHECK(group("dihedral 7").order() == 14);
    CHECK(group("cyclic 12").order() == 12);
    CHECK(group("elementary 3 3").order() == 27);
    CHECK(group("cyclic 1").is_trivial());
    const auto q8 = group("quaternion8");
    std::size_t involutions = 0;
    for (ElemIndex e = 0; e < q8.order(); ++e) involutions += q8.element_order(e) == 2;
    CHECK(q8.order() == 8);
    CHECK(involutions == 1);
  }

  TEST_CASE("order cap") {
    try {
      build_group(6, group("symmetric 6").generators(), 100);
      FAIL("expected OrderCapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderCapExceeded);
    }
  }

  TEST_CASE("group axioms on random permutation groups") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 3 + trial % 4;
      const auto g = build_group(n, {random_perm(rng, n), random_perm(rng, n)});
      CHECK(g.element(PermGroup::identity()).is_identity());
      std::uniform_int_distribution<ElemIndex> pick(0, static_cast<ElemIndex>(g.order() - 1));
      for (int k = 0; k < 50; ++k) {
        const ElemIndex a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
        CHECK(g.mul(a, g.inv(a)) == PermGroup::identity());
        CHECK(g.element(g.conj(a, b)) == g.element(b).inverse() * g.element(a) * g.element(b));
        CHECK(g.element(g.commutator(a, b)) ==
              g.element(a).inverse() * g.element(b).inverse() * g.element(a) * g.element(b));
      }
      // Lagrange for cyclic subgroups
      for (ElemIndex e = 0; e < g.order(); ++e) CHECK(g.order() % g.element_order(e) == 0);
    }
  }

  TEST_CASE("conjugacy classes match a direct orbit computation") {
    for (const char* spec : {"symmetric 4", "dihedral 6", "quaternion8", "alternating 5", "affine 3 2 [[0,1],[2,0]]"}) {
      const auto g = group(spec);
      const auto classes = conjugacy_classes(g);
      std::multiset<std::size_t> sizes(classes.sizes.begin(), classes.sizes.end());
      CHECK(sizes == naive_class_sizes(g));
      std::size_t total = 0;
      for (auto s : classes.sizes) total += s;
      CHECK(total == g.order());
      for (ElemIndex e = 0; e < g.order(); ++e) {
        const ElemIndex x = static_cast<ElemIndex>((e * 7 + 3) % g.order());
        CHECK(classes.class_of[g.conj(e, x)] == classes.class_of[e]);
      }
    }
    const auto s4 = conjugacy_classes(group("symmetric 4"));
    CHECK(std::multiset<std::size_t>(s4.sizes.begin(), s4.sizes.end()) == std::multiset<std::size_t>{1, 3, 6, 6, 8});
  }

  TEST_CASE("subgroup generation, normality and derived series") {
    const auto s4 = group("symmetric 4");
    const auto a4 = derived_subgroup(s4, whole_group(s4));
    CHECK(a4.order == 12);
    CHECK(is_normal(s4, a4));
    const auto v4 = derived_subgroup(s4, a4);
    CHECK(v4.order == 4);
    CHECK(is_abelian(s4, v4));
    CHECK(derived_subgroup(s4, v4).order == 1);
    CHECK(is_soluble(s4));
    CHECK_FALSE(is_soluble(group("alternating 5")));
    CHECK_FALSE(is_soluble(group("symmetric 5")));
    const auto t = generate(s4, {*s4.index_of(Permutation::from_cycles("(1,2)", 4))});
    CHECK(t.order == 2);
    CHECK_FALSE(is_normal(s4, t));
    CHECK(normal_closure(s4, s4.generator_indices(), t.generators).order == 24);
  }

  TEST_CASE("quotients") {
    const auto s4 = group("symmetric 4");
    const auto v4 = derived_subgroup(s4, derived_subgroup(s4, whole_group(s4)));
    const auto q = quotient(s4, v4);
    CHECK(q.group.order() == 6);
    CHECK_FALSE(is_abelian(q.group, whole_group(q.group)));
    for (ElemIndex a = 0; a < s4.order(); ++a)
      for (ElemIndex b = 0; b < s4.order(); b += 5)
        CHECK(q.epimorphism[s4.mul(a, b)] == q.group.mul(q.epimorphism[a], q.epimorphism[b]));
    for (ElemIndex a = 0; a < s4.order(); ++a) CHECK((q.epimorphism[a] == 0) == v4.contains(a));

    const auto t = generate(s4, {*s4.index_of(Permutation::from_cycles("(1,2)", 4))});
    try {
      quotient(s4, t);
      FAIL("expected NotNormal");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotNormal);
    }
  }

  TEST_CASE("section centralizer") {
    const auto s4 = group("symmetric 4");
    const auto a4 = derived_subgroup(s4, whole_group(s4));
    const auto v4 = derived_subgroup(s4, a4);
    const auto c = section_centralizer(s4, v4, trivial_subgroup(s4));
    CHECK(c.order == 4);
    CHECK(s4.order() / c.order == 6);
    // A4/V4 is centralized by A4 itself modulo V4
    CHECK(section_centralizer(s4, a4, v4).order == 12);
    try {
      section_centralizer(s4, v4, a4);
      FAIL("expected BadSection");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadSection);
    }
  }
}
