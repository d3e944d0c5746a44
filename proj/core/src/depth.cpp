#include "herbrand/depth.hpp"

#include <string>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

void require_nonnegative(const Rational& d, const char* what) {
  if (d.sign() < 0) throw Error(ErrorCode::domain, std::string(what) + " must be >= 0, got " + d.to_string());
}

void require_quadratic(const HerbrandData& ext) {
  if (ext.degree() != 2) {
    throw Error(ErrorCode::degree,
                "Asai lift needs [E:F] = 2, got e*f = " + std::to_string(ext.degree()));
  }
}

}  // namespace

void DepthQuery::validate() const {
  require_nonnegative(depth, "depth");
  if (kappa.sign() <= 0) throw Error(ErrorCode::domain, "kappa must be > 0, got " + kappa.to_string());
}

Rational depth_weil_restriction(const Rational& d, std::int64_t inertia_order) {
  require_nonnegative(d, "depth");
  return Rational(inertia_order) * d;
}

Rational depth_weil_restriction(const Rational& d, const RamificationProfile& profile) {
  return depth_weil_restriction(d, profile.inertia_order());
}

Rational depth_shapiro(const Rational& d, const HerbrandData& ext) {
  require_nonnegative(d, "depth");
  return ext.psi()(d);
}

Rational depth_llc(const DepthQuery& q, const HerbrandData& ext) {
  q.validate();
  return ext.phi()(q.kappa * depth_weil_restriction(q.depth, ext.inertia_order()));
}

DepthPreservation is_depth_preserving(const HerbrandData& ext) {
  if (ext.is_tame()) return {true, std::nullopt};
  return {false, ext.largest_upper_jump()};
}

Rational depth_ratio_constant(const HerbrandData& ext) {
  const auto u = ext.largest_lower_break();
  return ext.phi()(u) - u / ext.inertia_order();
}

bool wild_strict_increase_check(const HerbrandData& ext, const Rational& d) {
  if (ext.is_tame()) throw Error(ErrorCode::domain, "strict increase only holds for wild extensions");
  if (d.sign() <= 0) throw Error(ErrorCode::domain, "depth must be > 0, got " + d.to_string());
  return depth_llc({d, 1}, ext) > d;
}

GLnData conductor_from_depth(std::int64_t n, const Rational& d) {
  if (n < 2) throw Error(ErrorCode::domain, "conductor/depth relation needs n >= 2");
  require_nonnegative(d, "depth");
  const Rational nd = Rational(n) * d;
  if (!nd.is_integer()) {
    throw Error(ErrorCode::non_integral, "n * depth = " + nd.to_string() + " is not an integer");
  }
  const BigInt f = nd.numerator() + n;
  return {n, f, swan_from_conductor(n, f), d};
}

Rational swan_from_conductor(std::int64_t n, const BigInt& conductor) {
  if (n < 1) throw Error(ErrorCode::domain, "rank must be >= 1");
  return Rational(conductor - n, BigInt(n));
}

Rational automorphic_induction_depth(const HerbrandData& ext, const Rational& d) {
  require_nonnegative(d, "depth");
  return ext.phi()(d);
}

Rational asai_depth(const HerbrandData& ext, const Rational& d) {
  require_quadratic(ext);
  require_nonnegative(d, "depth");
  return ext.phi()(d);
}

Rational asai_swan(std::int64_t n, const HerbrandData& ext, const Rational& swan) {
  require_quadratic(ext);
  if (n < 2) throw Error(ErrorCode::domain, "Asai conductor formula needs n >= 2");
  require_nonnegative(swan, "Swan exponent");
  return ext.phi()(swan);
}

}  // namespace herbrand
