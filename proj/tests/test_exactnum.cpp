#include <doctest.h>

#include "herbrand/error.hpp"
#include "support.hpp"

using namespace herbrand;
using herbrand::testing::random_plf;
using herbrand::testing::random_rational;

namespace {

PiecewiseLinearFn plf(std::vector<Rational> starts, std::vector<Rational> slopes) {
  return PiecewiseLinearFn::from_segments(starts, slopes);
}

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("rational arithmetic is exact and reduced") {
    const Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(3, -9).denominator() == 3);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1) / Rational(3) * Rational(3) == Rational(1));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(1, 3) < Rational(1, 2));
  }

  TEST_CASE("rational text forms") {
    CHECK(Rational::parse("12/8") == Rational(3, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(4).to_string() == "4");
    CHECK(Rational(4).to_fraction_string() == "4/1");
    CHECK(Rational(-1, 2).to_fraction_string() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  }

  TEST_CASE("big values do not overflow") {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x *= Rational(1'000'003, 999'983);
    for (int i = 0; i < 40; ++i) x /= Rational(1'000'003, 999'983);
    CHECK(x == Rational(1));
  }

  TEST_CASE("plf_eval examples") {
    CHECK(PiecewiseLinearFn::identity()(Rational(7, 3)) == Rational(7, 3));
    // slope 1 on [0, 3], then 1/2
    const auto f = plf({0, 3}, {1, Rational(1, 2)});
    CHECK(f(Rational(5)) == Rational(4));
    CHECK(PiecewiseLinearFn::linear(2)(Rational(0)) == Rational(0));
    CHECK_THROWS_AS(f(Rational(-1)), Error);
  }

  TEST_CASE("plf_invert examples") {
    CHECK(invert(PiecewiseLinearFn::linear(3)) == PiecewiseLinearFn::linear(Rational(1, 3)));
    const auto psi = plf({0, 1}, {1, 2});
    const auto phi = plf({0, 1}, {1, Rational(1, 2)});
    CHECK(invert(psi) == phi);
    CHECK(phi(Rational(3)) == Rational(2));  // (x + 1) / 2
    CHECK(invert(PiecewiseLinearFn::identity()) == PiecewiseLinearFn::identity());
  }

  TEST_CASE("plf_compose examples") {
    const auto tame2 = PiecewiseLinearFn::linear(2);
    const auto as21 = plf({0, 1}, {1, 2});
    const auto expected = plf({0, Rational(1, 2)}, {2, 4});
    CHECK(compose(as21, tame2) == expected);
    CHECK(expected(Rational(1)) == Rational(3));  // 4x - 1
    const auto f = plf({0, 2, 5}, {3, 1, Rational(7, 2)});
    CHECK(compose(f, PiecewiseLinearFn::identity()) == f);
    CHECK(compose(PiecewiseLinearFn::identity(), f) == f);
  }

  TEST_CASE("canonical form merges collinear segments") {
    const auto f = plf({0, 1, 2}, {2, 2, 3});
    CHECK(f.segment_count() == 2);
    CHECK(f == plf({0, 2}, {2, 3}));
    CHECK_THROWS_AS(plf({1}, {1}), Error);
    CHECK_THROWS_AS(plf({0, 2, 1}, {1, 2, 3}), Error);
    CHECK_THROWS_AS(plf({0}, {0}), Error);
  }

  TEST_CASE("property: invert is a two-sided inverse") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = random_plf();
      const auto g = invert(f);
      for (int k = 0; k < 10; ++k) {
        const auto x = random_rational();
        REQUIRE(g(f(x)) == x);
        REQUIRE(f(g(x)) == x);
      }
      REQUIRE(invert(g) == f);
    }
  }

  TEST_CASE("property: compose is associative and pointwise") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = random_plf(), g = random_plf(), h = random_plf();
      REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
      const auto fg = compose(f, g);
      for (int k = 0; k < 10; ++k) {
        const auto x = random_rational();
        REQUIRE(fg(x) == f(g(x)));
      }
    }
  }

  TEST_CASE("property: pointwise equal functions are structurally equal") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = random_plf();
      // Rebuild f from a refined segment list with repeated slopes.
      std::vector<Rational> starts, slopes;
      for (std::size_t i = 0; i < f.segment_count(); ++i) {
        starts.push_back(f.breakpoints()[i].x);
        slopes.push_back(f.slopes()[i]);
        const Rational next = i + 1 < f.segment_count() ? f.breakpoints()[i + 1].x : f.breakpoints()[i].x + 5;
        starts.push_back((starts.back() + next) / 2);
        slopes.push_back(f.slopes()[i]);
      }
      const auto g = PiecewiseLinearFn::from_segments(starts, slopes);
      REQUIRE(g == f);
      REQUIRE(g.breakpoints().front().x == 0);
      REQUIRE(g.breakpoints().front().y == 0);
      for (std::size_t i = 1; i < g.slopes().size(); ++i) REQUIRE(g.slopes()[i] != g.slopes()[i - 1]);
    }
  }
}
