#include <doctest.h>

#include "herbrand/battery.hpp"
#include "herbrand/error.hpp"
#include "herbrand/laurent.hpp"
#include "support.hpp"

using namespace herbrand;
using herbrand::testing::uniform;
using Series = TruncatedLaurentSeries;

namespace {

Series series(std::uint32_t p, std::int64_t start, std::vector<Series::Coeff> c, std::int64_t precision) {
  return Series(p, start, std::move(c), precision);
}

// Equal as far as both are known.
bool agree(const Series& a, const Series& b) { return (a - b).is_zero(); }

Series random_series(std::uint32_t p, std::int64_t valuation, std::int64_t relative) {
  std::vector<Series::Coeff> c(static_cast<std::size_t>(relative));
  for (auto& x : c) x = static_cast<Series::Coeff>(uniform(0, p - 1));
  c[0] = static_cast<Series::Coeff>(uniform(1, p - 1));
  return Series(p, valuation, std::move(c), valuation + relative);
}

Series power(const Series& x, std::int64_t k) {
  Series out = Series::constant(x.p(), 1, x.absolute_precision() + 64);
  for (std::int64_t i = 0; i < k; ++i) out = out * x;
  return out;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic examples") {
    const auto one_plus_t = series(2, 0, {1, 1}, 10);
    const auto sq = one_plus_t * one_plus_t;
    CHECK(sq.absolute_precision() == 10);
    CHECK(sq.coefficient(0) == 1);
    CHECK(sq.coefficient(1) == 0);
    CHECK(sq.coefficient(2) == 1);
    for (std::int64_t k = 3; k < 10; ++k) CHECK(sq.coefficient(k) == 0);

    // 1 / (1 - t) = 1 + t + t^2 + ... over F_3
    const auto inv = series(3, 0, {1, 2}, 8).inverse();
    CHECK(inv.absolute_precision() == 8);
    for (std::int64_t k = 0; k < 8; ++k) CHECK(inv.coefficient(k) == 1);

    const auto x = series(5, -2, {3, 0, 1}, 4);
    CHECK(x.valuation() == -2);
    CHECK(x.valuation_is_exact());
    CHECK(x.precision() == 6);
    CHECK((x - x).is_zero());
    CHECK((x - x).absolute_precision() == 4);
    CHECK(x.inverse().valuation() == 2);
    CHECK(x.inverse().precision() == 6);
    CHECK_THROWS_AS(Series::zero(5, 3).inverse(), Error);
    // Leading zeros are stripped.
    CHECK(series(3, 0, {0, 0, 2}, 5) == series(3, 2, {2}, 5));
    CHECK_THROWS_AS(series(4, 0, {1}, 3), Error);
  }

  TEST_CASE("precision rules") {
    const auto a = series(2, 1, {1, 1, 0, 1}, 5);  // v = 1, P = 5
    const auto b = series(2, 3, {1, 0}, 5);        // v = 3, P = 5
    CHECK((a + b).absolute_precision() == 5);
    CHECK((a * b).absolute_precision() == 6);  // min(1 + 5, 3 + 5)
    const auto c = compose(series(2, 0, {1, 1, 1}, 3), series(2, 2, {1, 1, 1, 1}, 6));
    CHECK(c.absolute_precision() == 4);  // min(3 * 2, 0 * 2 + 4)
  }

  TEST_CASE("oracle: sigma(t)^-m = t^-m + 1") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (std::int64_t m : {1, 2, 3, 4, 5, 7}) {
        if (m % p == 0) continue;
        const auto sigma = as_automorphism(p, m, 64);
        const auto lhs = power(sigma.image_of_t(), m).inverse();
        const auto rhs = Series::monomial(p, 1, -m, 64) + Series::constant(p, 1, 64);
        REQUIRE(lhs.absolute_precision() >= 64 - 2 * m);
        REQUIRE(agree(lhs, rhs));
      }
    }
  }

  TEST_CASE("wild automorphisms: order and break") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (std::int64_t m : {1, 2, 3, 4, 5, 7}) {
        if (m % p == 0) {
          CHECK_THROWS_AS(as_automorphism(p, m, 64), Error);
          continue;
        }
        const auto sigma = as_automorphism(p, m, 96);
        REQUIRE(sigma.order() == p);
        REQUIRE(measured_break(sigma) == m);
        const std::vector<SeriesAutomorphism> gens{sigma};
        REQUIRE(profile_from_group(gens, p, p, 96) == catalog::artin_schreier(p, m));
      }
    }
  }

  TEST_CASE("tame automorphisms") {
    CHECK(root_of_unity(5, 4) != 0);
    CHECK_THROWS_AS(root_of_unity(5, 3), Error);
    for (auto [p, e] : {std::pair{3u, 2u}, {5u, 2u}, {5u, 4u}, {7u, 3u}}) {
      const auto zeta = root_of_unity(p, e);
      const auto s = scaling_automorphism(p, zeta, 32);
      CHECK(s.order() == e);
      const std::vector<SeriesAutomorphism> gens{s};
      CHECK(profile_from_group(gens, p, e, 32) == catalog::tame(e, p));
      CHECK_THROWS_AS(profile_from_group(gens, p, e + 1, 32), Error);
    }
  }

  TEST_CASE("automorphisms compose by substitution") {
    const auto s = as_automorphism(3, 2, 48);
    const auto id = SeriesAutomorphism::identity(3, 48);
    CHECK(id.is_identity());
    CHECK((s * id).image_of_t() == s.image_of_t());
    auto power = s;
    for (int k = 1; k < 3; ++k) power = s * power;
    CHECK(power.is_identity());
    CHECK_THROWS_AS(SeriesAutomorphism(Series::monomial(3, 1, 2, 10)), Error);
    CHECK_THROWS_AS(measured_break(id), Error);
  }

  TEST_CASE("norm examples") {
    // p = 2, m = 1: sigma(t) = t / (1 + t), so N(t) = t^2 / (1 + t).
    const auto sigma = as_automorphism(2, 1, 40);
    const std::vector<SeriesAutomorphism> group{SeriesAutomorphism::identity(2, 40), sigma};
    const auto t = Series::monomial(2, 1, 1, 40);
    const auto expected = Series::monomial(2, 1, 2, 41) * series(2, 0, {1, 1}, 40).inverse();
    CHECK(agree(norm(t, group), expected));
    CHECK(norm(t, group).valuation() == 2);
    const std::vector<SeriesAutomorphism> not_closed{sigma};
    CHECK_THROWS_AS(norm(t, not_closed), Error);
  }

  TEST_CASE("norm probe reports") {
    const std::vector<SeriesAutomorphism> gens{as_automorphism(3, 2, 64)};
    const auto group = generated_group(gens, 3, 64);
    CHECK(group.size() == 3);
    const auto profile = catalog::artin_schreier(3, 2);
    const auto r = norm_filtration_probe(group, profile, 3, 20, 7);
    CHECK(r.start_valuation == 5);  // psi(3) = 2 + 3
    CHECK(r.required_valuation == 9);
    CHECK(r.ok());
    CHECK(r.min_valuation >= 9);
    CHECK_THROWS_AS(norm_filtration_probe(group, profile, 40, 5, 0), Error);
  }

  TEST_CASE("torus filtration examples") {
    for (std::int64_t e : {2, 3}) {
      for (const auto& r : {Rational(0), Rational(1, 2), Rational(5, 4), Rational(3, 2), Rational(2)}) {
        CHECK(torus_filtration_check(e, r, 64, 64));
        CHECK(torus_filtration_check(e, r, 64, 64, 3, 3));
      }
    }
    CHECK_THROWS_AS(torus_filtration_check(2, Rational(40), 8, 64), Error);
    CHECK_THROWS_AS(torus_filtration_check(2, Rational(-1), 8, 64), Error);
  }

  TEST_CASE("property: series form a field to precision") {
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint32_t p = trial % 3 == 0 ? 2u : trial % 3 == 1 ? 3u : 7u;
      const auto a = random_series(p, uniform(-3, 3), uniform(1, 20));
      const auto b = random_series(p, uniform(-3, 3), uniform(1, 20));
      const auto c = random_series(p, uniform(-3, 3), uniform(1, 20));
      REQUIRE(agree((a * b) * c, a * (b * c)));
      REQUIRE(agree(a * (b + c), a * b + a * c));
      REQUIRE(agree(a + b, b + a));
      REQUIRE(agree(a * a.inverse(), Series::constant(p, 1, 100)));
      REQUIRE((a * b).valuation() == a.valuation() + b.valuation());
      REQUIRE((a * b).precision() == std::min(a.precision(), b.precision()));
    }
  }

  TEST_CASE("property: automorphisms are ring homomorphisms") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto sigma = as_automorphism(p, p == 2 ? 3 : 2, 80);
      for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(p, uniform(-2, 4), uniform(1, 30));
        const auto b = random_series(p, uniform(-2, 4), uniform(1, 30));
        REQUIRE(agree(sigma.apply(a * b), sigma.apply(a) * sigma.apply(b)));
        REQUIRE(agree(sigma.apply(a + b), sigma.apply(a) + sigma.apply(b)));
        REQUIRE(sigma.apply(a).valuation() == a.valuation());
        REQUIRE(agree(sigma.apply(sigma.apply(a)), (sigma * sigma).apply(a)));
        REQUIRE(agree(compose(a, sigma.image_of_t()), sigma.apply(a)));
      }
      const auto group = generated_group(std::vector<SeriesAutomorphism>{sigma}, p, 80);
      const auto n = norm(random_series(p, 1, 40), group);
      for (const auto& g : group) REQUIRE(agree(g.apply(n), n));
    }
  }

  TEST_CASE("series battery: small cases pass") {
    LaurentOptions opts;
    opts.precision = 96;
    opts.trials = 8;
    opts.max_n = 3;
    for (const auto& row : run_artin_schreier_case(2, 3, opts)) {
      CAPTURE(row.name);
      REQUIRE(row.pass);
    }
    for (const auto& row : run_tame_case(5, 4, opts)) {
      CAPTURE(row.name);
      REQUIRE(row.pass);
    }
    const auto points = sample_points(Rational(2));
    CHECK(points.size() == 20);
    CHECK(points.front() == 0);
    CHECK(points.back() == 11);
  }
}
