#include <doctest.h>

#include <algorithm>

#include "herbrand/error.hpp"
#include "herbrand/group.hpp"

using namespace herbrand;

namespace {

void check_axioms(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a) {
    REQUIRE(g.mul(0, a) == a);
    REQUIRE(g.mul(a, 0) == a);
    REQUIRE(g.mul(a, g.inv(a)) == 0);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
  REQUIRE(closure(g, g.generators()).size() == g.order());
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("small groups satisfy the axioms") {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const auto c = FiniteGroup::cyclic(n);
      CHECK(c.order() == n);
      CHECK(c.is_abelian());
      check_axioms(c);
    }
    for (const auto& g : {FiniteGroup::klein_four(), FiniteGroup::symmetric3(), FiniteGroup::dihedral4()}) {
      check_axioms(g);
    }
    CHECK(FiniteGroup::klein_four().is_abelian());
    CHECK_FALSE(FiniteGroup::symmetric3().is_abelian());
    CHECK_FALSE(FiniteGroup::dihedral4().is_abelian());
    CHECK(FiniteGroup::dihedral4().order() == 8);
  }

  TEST_CASE("element orders and powers") {
    const auto c6 = FiniteGroup::cyclic(6);
    CHECK(c6.element_order(0) == 1);
    CHECK(c6.element_order(1) == 6);
    CHECK(c6.element_order(2) == 3);
    CHECK(c6.element_order(3) == 2);
    CHECK(c6.pow(1, 5) == 5);
    CHECK(c6.pow(1, -1) == 5);
    const auto s3 = FiniteGroup::symmetric3();
    std::vector<std::uint32_t> orders;
    for (Elem a = 0; a < 6; ++a) orders.push_back(s3.element_order(a));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<std::uint32_t>{1, 2, 2, 2, 3, 3});
  }

  TEST_CASE("from_table rejects tables that are not groups") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), Error);
    // x*y = x - y mod 3 is a quasigroup without an identity.
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}), Error);
    const auto z2 = FiniteGroup::from_table({{1, 0}, {0, 1}});
    CHECK(z2.order() == 2);
    CHECK(z2.mul(1, 1) == 0);
  }

  TEST_CASE("subgroups and normality") {
    const auto s3 = FiniteGroup::symmetric3();
    const auto subs = all_subgroups(s3);
    CHECK(subs.size() == 6);  // 1, three of order 2, A3, S3
    std::size_t normal = 0;
    for (const auto& h : subs) {
      CHECK(is_subgroup(s3, h));
      if (is_normal(s3, h)) ++normal;
    }
    CHECK(normal == 3);
    CHECK(all_subgroups(FiniteGroup::dihedral4()).size() == 10);
    CHECK(all_subgroups(FiniteGroup::klein_four()).size() == 5);
    CHECK(all_subgroups(FiniteGroup::cyclic(8)).size() == 4);
    const std::vector<Elem> not_closed{0, 1};
    CHECK_FALSE(is_subgroup(FiniteGroup::cyclic(4), not_closed));
    CHECK_THROWS_AS(make_subgroup(FiniteGroup::cyclic(4), not_closed, "bad"), Error);
  }

  TEST_CASE("quotients") {
    const auto d4 = FiniteGroup::dihedral4();
    for (const auto& n : all_subgroups(d4)) {
      if (!is_normal(d4, n)) {
        CHECK_THROWS_AS(make_quotient(d4, n), Error);
        continue;
      }
      const auto q = make_quotient(d4, n);
      REQUIRE(q.group.order() * n.size() == d4.order());
      for (Elem x = 0; x < d4.order(); ++x) {
        REQUIRE(q.projection[q.section[q.projection[x]]] == q.projection[x]);
        for (Elem y = 0; y < d4.order(); ++y)
          REQUIRE(q.projection[d4.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
      }
    }
  }

  TEST_CASE("power groups encode coordinates") {
    const auto s3 = FiniteGroup::symmetric3();
    const auto p = FiniteGroup::power(s3, 3);
    CHECK(p.order() == 216);
    CHECK(p.is_power());
    CHECK(p.power_rank() == 3);
    std::vector<Elem> a{1, 4, 2}, b{3, 3, 5}, ab(3);
    const Elem ea = p.encode(a), eb = p.encode(b);
    p.decode(p.mul(ea, eb), ab);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(ab[i] == s3.mul(a[i], b[i]));
      CHECK(p.coordinate(ea, i) == a[i]);
    }
    CHECK(p.mul(ea, p.inv(ea)) == 0);
    check_axioms(FiniteGroup::power(FiniteGroup::cyclic(2), 3));
  }

  TEST_CASE("subgroup_of a large power group") {
    const auto p = FiniteGroup::power(FiniteGroup::cyclic(3), 6);
    std::vector<Elem> diagonal;
    for (Elem c = 0; c < 3; ++c) diagonal.push_back(p.encode(std::vector<Elem>(6, c)));
    const auto d = FiniteGroup::subgroup_of(p, diagonal, "diag");
    CHECK(d.order() == 3);
    CHECK(d.is_subgroup());
    for (Elem a = 0; a < 3; ++a) CHECK(d.from_parent(d.to_parent(a)) == a);
    CHECK(d.from_parent(1) == FiniteGroup::npos);
  }

  TEST_CASE("actions are validated") {
    const auto z2 = FiniteGroup::cyclic(2);
    const auto z3 = FiniteGroup::cyclic(3);
    const auto inv = inversion_map(z3);
    CHECK(inv == std::vector<Elem>{0, 2, 1});
    const GGroup ok(z2, z3, [inv](Elem x, Elem a) { return x ? inv[a] : a; });
    CHECK(ok.act(1, 1) == 2);
    // Not a homomorphism of the acting group: the generator of Z/3 acting by inversion.
    CHECK_THROWS_AS(GGroup(z3, z3, [inv](Elem x, Elem a) { return x ? inv[a] : a; }), Error);
    // Not an automorphism of A.
    CHECK_THROWS_AS(GGroup(z2, z3, [](Elem x, Elem a) { return x ? Elem(0) : a; }), Error);
  }

  TEST_CASE("sign characters and conjugation") {
    const auto sign = sign_character(FiniteGroup::symmetric3());
    REQUIRE(sign);
    CHECK(std::count(sign->begin(), sign->end(), 1) == 3);
    CHECK_FALSE(sign_character(FiniteGroup::cyclic(3)));
    const auto s3 = FiniteGroup::symmetric3();
    for (Elem by = 0; by < 6; ++by) {
      const auto c = conjugation_map(s3, by);
      for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b) REQUIRE(c[s3.mul(a, b)] == s3.mul(c[a], c[b]));
    }
  }
}
