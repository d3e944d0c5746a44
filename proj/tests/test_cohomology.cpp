#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "herbrand/battery.hpp"
#include "herbrand/cohomology.hpp"
#include "herbrand/error.hpp"

using namespace herbrand;

namespace {

// Classes of H^1 found by listing every map g -> A and merging cocycles
// related by a twist, with no use of the search in the library.
struct BruteH1 {
  std::vector<Cocycle> cocycles;
  std::vector<std::size_t> class_of;  // per cocycle, a class label
  std::size_t classes = 0;
};

BruteH1 brute_h1(const GGroup& m) {
  const auto& g = m.acting();
  const auto& a = m.coefficients();
  const std::size_t n = g.order(), na = a.order();
  BruteH1 out;
  Cocycle c(n, 0);
  while (true) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) ok = c[g.mul(x, y)] == a.mul(c[x], m.act(x, c[y]));
    if (ok) out.cocycles.push_back(c);
    std::size_t i = 0;
    while (i < n && ++c[i] == na) c[i++] = 0;
    if (i == n) break;
  }
  std::map<Cocycle, std::size_t> index;
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) index[out.cocycles[i]] = i;
  std::vector<std::size_t> parent(out.cocycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
    for (Elem b = 0; b < na; ++b) {
      Cocycle t(n);
      for (Elem x = 0; x < n; ++x) t[x] = a.mul(a.mul(a.inv(b), out.cocycles[i][x]), m.act(x, b));
      parent[find(i)] = find(index.at(t));
    }
  }
  std::map<std::size_t, std::size_t> label;
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
    const auto root = find(i);
    if (!label.count(root)) label[root] = label.size();
    out.class_of.push_back(label[root]);
  }
  out.classes = label.size();
  return out;
}

void compare_with_brute(const GGroup& m) {
  const auto h1 = enumerate_h1(m);
  const auto brute = brute_h1(m);
  REQUIRE(h1.size() == brute.classes);
  REQUIRE(h1.cocycle_count() == brute.cocycles.size());
  REQUIRE(std::all_of(h1.classes()[0].begin(), h1.classes()[0].end(), [](Elem v) { return v == 0; }));
  REQUIRE(std::is_sorted(h1.classes().begin(), h1.classes().end()));
  // classify must induce exactly the brute-force partition.
  std::map<std::size_t, std::size_t> brute_to_h1;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < brute.cocycles.size(); ++i) {
    const auto k = h1.classify(brute.cocycles[i]);
    REQUIRE(k < h1.size());
    const auto [it, inserted] = brute_to_h1.emplace(brute.class_of[i], k);
    REQUIRE(it->second == k);
    if (inserted) REQUIRE(seen.insert(k).second);
    REQUIRE(h1.classify(h1.classes()[k]) == k);
  }
}

std::vector<GGroup> small_modules() {
  std::vector<GGroup> out;
  for (const auto& g : battery_groups()) {
    if (g.group.order() > 8) continue;
    for (const auto& rule : battery_modules()) {
      auto m = rule.make(g.group);
      if (!m) continue;
      double maps = 1;
      for (std::size_t i = 0; i < g.group.order(); ++i) maps *= static_cast<double>(m->coefficients().order());
      if (maps <= 2e6) out.push_back(*m);
    }
  }
  return out;
}

GGroup inverted(const FiniteGroup& g, const FiniteGroup& a) {
  return GGroup::twisted_by_sign(g, a, *sign_character(g), inversion_map(a));
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("h1_enumerate examples") {
    const auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    CHECK(enumerate_h1(GGroup::trivial_action(z2, z3)).size() == 1);
    CHECK(enumerate_h1(inverted(z2, z3)).size() == 1);
    CHECK(enumerate_h1(inverted(z2, z3)).cocycle_count() == 3);
    const auto h = enumerate_h1(GGroup::trivial_action(z2, z2));
    CHECK(h.size() == 2);
    CHECK(h.classes()[1] == Cocycle{0, 1});
    // Z/4 with x -> -x: 2-torsion over norms, Z/2.
    CHECK(enumerate_h1(inverted(z2, FiniteGroup::cyclic(4))).size() == 2);
    // Hom(Z/4, Z/4) and Hom(Z/4, Z/2) for trivial action.
    CHECK(enumerate_h1(GGroup::trivial_action(FiniteGroup::cyclic(4), FiniteGroup::cyclic(4))).size() == 4);
    CHECK(enumerate_h1(GGroup::trivial_action(FiniteGroup::cyclic(4), z2)).size() == 2);
  }

  TEST_CASE("non-abelian coefficients count conjugacy classes of homomorphisms") {
    const auto s3 = FiniteGroup::symmetric3();
    // Hom(Z/2, S_3) / conjugacy: trivial and one class of involutions.
    CHECK(enumerate_h1(GGroup::trivial_action(FiniteGroup::cyclic(2), s3)).size() == 2);
    // Hom(Z/3, S_3) / conjugacy: trivial, and the two 3-cycle maps fused.
    CHECK(enumerate_h1(GGroup::trivial_action(FiniteGroup::cyclic(3), s3)).size() == 2);
    // Hom(S_3, S_3) / conjugacy: trivial, sign-like (image of order 2), automorphisms.
    CHECK(enumerate_h1(GGroup::trivial_action(s3, s3)).size() == 3);
  }

  TEST_CASE("classify rejects cochains that are not cocycles") {
    const auto m = GGroup::trivial_action(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    const auto h = enumerate_h1(m);
    CHECK_FALSE(is_cocycle(m, {1, 0}));
    try {
      (void)h.classify({1, 0});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_structure);
    }
    CHECK(h.classify(twist(m, {0, 1}, 1)) == 1);
  }

  TEST_CASE("budget is enforced") {
    const auto m = GGroup::trivial_action(FiniteGroup::dihedral4(), FiniteGroup::symmetric3());
    H1Options tight;
    tight.budget = 10;
    try {
      (void)enumerate_h1(m, tight);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::budget_exceeded);
    }
    CHECK_NOTHROW((void)enumerate_h1(m));
  }

  TEST_CASE("enumeration agrees with brute force on the small battery") {
    const auto modules = small_modules();
    CHECK(modules.size() > 40);
    for (const auto& m : modules) {
      CAPTURE(m.acting().name());
      CAPTURE(m.coefficients().name());
      compare_with_brute(m);
    }
  }

  TEST_CASE("trivial action on abelian coefficients counts homomorphisms") {
    for (const auto& g : battery_groups()) {
      for (std::uint32_t n : {2u, 3u, 4u}) {
        const auto a = FiniteGroup::cyclic(n);
        REQUIRE(enumerate_h1(GGroup::trivial_action(g.group, a)).size() == count_homomorphisms(g.group, a));
      }
    }
  }

  TEST_CASE("induce example: trivial subgroup of Z/2") {
    const auto z2 = FiniteGroup::cyclic(2);
    const std::vector<Elem> trivial{0};
    const auto h = make_subgroup(z2, trivial, "1");
    const auto ind = induce(z2, h, GGroup::trivial_action(h.group, FiniteGroup::cyclic(3)));
    CHECK(ind.module.coefficients().order() == 9);
    CHECK(ind.coset_reps == std::vector<Elem>{0, 1});
    for (Elem f = 0; f < 9; ++f) {
      const Elem moved = ind.module.act(1, f);
      CHECK(ind.evaluate(moved, 0) == ind.evaluate(f, 1));
      CHECK(ind.evaluate(moved, 1) == ind.evaluate(f, 0));
    }
    // The induced module is the permutation module, with H^1 = H^1(1, Z/3) = 1.
    CHECK(enumerate_h1(ind.module).size() == 1);
  }

  TEST_CASE("induced functions are h-equivariant") {
    const auto s3 = FiniteGroup::symmetric3();
    for (const auto& elems : all_subgroups(s3)) {
      const auto h = make_subgroup(s3, elems, "h");
      const auto sign = sign_character(h.group);
      const auto m = sign ? GGroup::twisted_by_sign(h.group, FiniteGroup::cyclic(3), *sign,
                                                    inversion_map(FiniteGroup::cyclic(3)))
                          : GGroup::trivial_action(h.group, FiniteGroup::cyclic(3));
      const auto ind = induce(s3, h, m);
      REQUIRE(ind.module.coefficients().order() == std::size_t(std::pow(3, 6 / elems.size())));
      for (Elem f = 0; f < ind.module.coefficients().order(); ++f) {
        for (Elem hi = 0; hi < h.group.order(); ++hi)
          for (Elem x = 0; x < 6; ++x)
            REQUIRE(ind.evaluate(f, s3.mul(h.embedding[hi], x)) == m.act(hi, ind.evaluate(f, x)));
        for (Elem y = 0; y < 6; ++y)
          for (Elem x = 0; x < 6; ++x)
            REQUIRE(ind.evaluate(ind.module.act(y, f), x) == ind.evaluate(f, s3.mul(x, y)));
      }
    }
  }

  TEST_CASE("shapiro examples") {
    const auto s3 = FiniteGroup::symmetric3();
    const auto subs = all_subgroups(s3);
    const auto a3 = *std::find_if(subs.begin(), subs.end(), [](const auto& s) { return s.size() == 3; });
    const auto h = make_subgroup(s3, a3, "A3");
    const auto z3 = FiniteGroup::cyclic(3);
    const auto r = shapiro_check(s3, h, GGroup::trivial_action(h.group, z3));
    CHECK(r.passed);
    CHECK(r.lhs_size == 3);
    CHECK(r.rhs_size == 3);
    // Whole group: induction is the identity.
    const auto whole = make_subgroup(s3, subs.back(), "S3");
    const auto w = shapiro_check(s3, whole, GGroup::trivial_action(whole.group, FiniteGroup::cyclic(2)));
    CHECK(w.passed);
    CHECK(w.lhs_size == 2);
  }

  TEST_CASE("inflation, submodule lemma and refined Shapiro examples") {
    const auto z4 = FiniteGroup::cyclic(4);
    const std::vector<Elem> two{0, 2};
    const auto m = GGroup::trivial_action(z4, FiniteGroup::cyclic(2));
    const auto inf = inflation_injectivity_check(z4, two, m);
    CHECK(inf.passed);
    CHECK(inf.lhs_size == 2);  // Hom(Z/2, Z/2)
    CHECK(inf.rhs_size == 2);  // Hom(Z/4, Z/2)

    const auto whole = make_subgroup(z4, std::vector<Elem>{0, 1, 2, 3}, "C4");
    CHECK(submodule_lemma_check(z4, whole, two, m).passed);
    const auto refined = refined_shapiro_check(z4, whole, two, m);
    CHECK(refined.passed);
    CHECK(refined.lhs_size == 2);

    const auto sub = make_subgroup(z4, two, "2C4");
    const auto ms = GGroup::trivial_action(sub.group, FiniteGroup::cyclic(3));
    CHECK(submodule_lemma_check(z4, sub, two, ms).passed);
    const auto r = refined_shapiro_check(z4, sub, two, ms);
    CHECK(r.passed);
    CHECK(r.lhs_size == 1);
    CHECK(r.rhs_size == 1);
  }

  TEST_CASE("checks reject a non-normal subgroup") {
    const auto s3 = FiniteGroup::symmetric3();
    const auto subs = all_subgroups(s3);
    const auto order2 = *std::find_if(subs.begin(), subs.end(), [](const auto& s) { return s.size() == 2; });
    const auto m = GGroup::trivial_action(s3, FiniteGroup::cyclic(2));
    CHECK_THROWS_AS(inflation_injectivity_check(s3, order2, m), Error);
  }
}
