#pragma once

// Seeded generators and independent reference computations shared by the
// unit tests.

#include <cstdint>
#include <random>
#include <vector>

#include "herbrand/piecewise_linear.hpp"
#include "herbrand/ramification.hpp"

namespace herbrand::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// A nonnegative rational with small numerator and denominator.
inline Rational random_rational(std::int64_t max_num = 60, std::int64_t max_den = 12) {
  return Rational(uniform(0, max_num)) / Rational(uniform(1, max_den));
}

inline Rational random_positive_rational(std::int64_t max_num = 20, std::int64_t max_den = 7) {
  return Rational(uniform(1, max_num)) / Rational(uniform(1, max_den));
}

/// Random strictly increasing piecewise-linear function with 1..5 segments.
inline PiecewiseLinearFn random_plf() {
  const auto n = uniform(1, 5);
  std::vector<Rational> starts{Rational(0)}, slopes;
  for (std::int64_t i = 1; i < n; ++i) starts.push_back(starts.back() + random_positive_rational());
  for (std::int64_t i = 0; i < n; ++i) slopes.push_back(random_positive_rational());
  return PiecewiseLinearFn::from_segments(starts, slopes);
}

/// Catalog profiles covering every family.
inline std::vector<RamificationProfile> catalog_profiles() {
  std::vector<RamificationProfile> out;
  for (std::int64_t f = 1; f <= 4; ++f) out.push_back(catalog::unramified(f, 2));
  for (std::int64_t e = 1; e <= 7; ++e) out.push_back(catalog::tame(e, e % 2 != 0 ? 2 : e % 3 != 0 ? 3 : 5));
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t m = 1; m <= 7; ++m)
      if (m % p != 0) out.push_back(catalog::artin_schreier(p, m));
  for (std::int64_t p : {2, 3})
    for (std::int64_t n = 1; n <= 3; ++n) out.push_back(catalog::cyclotomic(p, n));
  return out;
}

/// phi read off the lower filtration as phi(u) = int_0^u |G_t| / e dt, with
/// G_t = G_ceil(t); independent of the upper-numbering construction.
inline Rational reference_phi(const RamificationProfile& profile, const Rational& u) {
  const Rational e(profile.inertia_order());
  Rational total(0);
  std::int64_t k = 1;
  while (Rational(k) <= u) {
    total += Rational(profile.order_at(k)) / e;
    ++k;
  }
  return total + (u - Rational(k - 1)) * Rational(profile.order_at(k)) / e;
}

}  // namespace herbrand::testing
