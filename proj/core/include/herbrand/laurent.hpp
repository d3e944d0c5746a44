#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "herbrand/ramification.hpp"

namespace herbrand {

/// Element of F_p((t)) known modulo t^absolute_precision.
///
/// Stored as coefficients of t^v, t^{v+1}, ..., t^{v+N-1} with the first one
/// nonzero, where v is the valuation and N the relative precision. A series
/// with no significant coefficient is "zero to precision": N = 0 and its
/// valuation is only known to be at least absolute_precision.
///
/// Precision rules (P = absolute precision, v = valuation):
///   a + b, a - b : P = min(P_a, P_b)
///   a * b        : P = min(v_a + P_b, v_b + P_a)
///   1 / a        : relative precision unchanged
///   compose(x, y): P = min(P_x w, v_x w + N_y) for w = v(y) >= 1
class TruncatedLaurentSeries {
 public:
  using Coeff = std::uint32_t;

  /// Coefficients of t^start, t^{start+1}, ... reduced mod p; the list must
  /// not reach absolute_precision. Throws ErrorCode::invalid_parameter.
  TruncatedLaurentSeries(std::uint32_t p, std::int64_t start, std::vector<Coeff> coefficients,
                         std::int64_t absolute_precision);

  static TruncatedLaurentSeries zero(std::uint32_t p, std::int64_t absolute_precision);
  static TruncatedLaurentSeries constant(std::uint32_t p, Coeff c, std::int64_t absolute_precision);
  static TruncatedLaurentSeries monomial(std::uint32_t p, Coeff c, std::int64_t exponent,
                                         std::int64_t absolute_precision);

  std::uint32_t p() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Exact valuation, or the lower bound absolute_precision when zero to precision.
  std::int64_t valuation() const { return start_; }
  bool valuation_is_exact() const { return !coeffs_.empty(); }
  std::int64_t precision() const { return static_cast<std::int64_t>(coeffs_.size()); }
  std::int64_t absolute_precision() const { return start_ + precision(); }
  /// Coefficient of t^k for k below the absolute precision.
  Coeff coefficient(std::int64_t k) const;
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  /// Same series known only modulo t^absolute_precision (which must not exceed the current one).
  TruncatedLaurentSeries truncated(std::int64_t absolute_precision) const;

  TruncatedLaurentSeries operator-() const;
  friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
  friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
  friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
  /// Throws ErrorCode::precision when zero to precision.
  TruncatedLaurentSeries inverse() const;

  bool operator==(const TruncatedLaurentSeries&) const = default;
  std::string to_string(std::size_t max_terms = 8) const;

 private:
  TruncatedLaurentSeries(std::uint32_t p, std::int64_t start, std::vector<Coeff> coefficients,
                         std::int64_t absolute_precision, bool reduced);
  void normalize(std::int64_t absolute_precision);

  std::uint32_t p_ = 2;
  std::int64_t start_ = 0;
  std::vector<Coeff> coeffs_;
};

/// x(y), substituting y for t. y must have exact valuation >= 1.
TruncatedLaurentSeries compose(const TruncatedLaurentSeries& x, const TruncatedLaurentSeries& y);

/// Continuous automorphism of F_p((t)) given by t -> image_of_t, acting on a
/// series by substitution: sigma.x = x(sigma(t)).
class SeriesAutomorphism {
 public:
  /// image_of_t must have exact valuation 1. Throws ErrorCode::invalid_parameter.
  explicit SeriesAutomorphism(TruncatedLaurentSeries image_of_t);
  static SeriesAutomorphism identity(std::uint32_t p, std::int64_t precision);

  std::uint32_t p() const { return image_.p(); }
  const TruncatedLaurentSeries& image_of_t() const { return image_; }
  /// Relative precision of sigma(t).
  std::int64_t precision() const { return image_.precision(); }

  TruncatedLaurentSeries apply(const TruncatedLaurentSeries& x) const;
  /// (a * b).x = a.(b.x)
  friend SeriesAutomorphism operator*(const SeriesAutomorphism& a, const SeriesAutomorphism& b);
  /// sigma(t) = t to precision.
  bool is_identity() const;
  /// Smallest k >= 1 with sigma^k = id to precision. Throws ErrorCode::closure
  /// beyond `limit`.
  std::uint32_t order(std::uint32_t limit = 64) const;

  bool operator==(const SeriesAutomorphism& other) const { return image_ == other.image_; }

 private:
  struct Powers;
  TruncatedLaurentSeries image_;
  std::shared_ptr<Powers> powers_;
};

/// An element of exact multiplicative order e in F_p^x. Throws
/// ErrorCode::invalid_parameter unless e divides p - 1.
std::uint32_t root_of_unity(std::uint32_t p, std::uint32_t e);

/// t -> zeta t.
SeriesAutomorphism scaling_automorphism(std::uint32_t p, std::uint32_t zeta, std::int64_t precision);

/// t -> t (1 + t^m)^{-1/m}, an automorphism of order p with lower break m.
/// Throws ErrorCode::invalid_parameter when p divides m.
SeriesAutomorphism as_automorphism(std::uint32_t p, std::int64_t m, std::int64_t precision = 256);

/// v(sigma(t) - t) - 1. Throws ErrorCode::invalid_parameter on the identity.
std::int64_t measured_break(const SeriesAutomorphism& sigma);

/// The group generated by `gens` (identity first, then in discovery order).
/// Throws ErrorCode::closure when it has more than `limit` elements.
std::vector<SeriesAutomorphism> generated_group(std::span<const SeriesAutomorphism> gens, std::uint32_t p,
                                                std::int64_t precision, std::size_t limit = 64);

/// Lower-numbering filtration of the generated group, from
/// |G_u| = #{g : v(g(t) - t) >= u + 1}. Throws ErrorCode::closure,
/// ErrorCode::invalid_structure (order differs from e_expected, or a level is
/// not a subgroup).
RamificationProfile profile_from_group(std::span<const SeriesAutomorphism> gens, std::uint32_t p,
                                       std::int64_t e_expected, std::int64_t precision = 256);

/// Product of g.x over the group. Throws ErrorCode::closure if `group` is not closed.
TruncatedLaurentSeries norm(const TruncatedLaurentSeries& x, std::span<const SeriesAutomorphism> group);

struct NormProbeReport {
  std::int64_t n = 0;
  std::int64_t start_valuation = 0;     // psi(n): valuation of u - 1 for the sampled units
  std::int64_t required_valuation = 0;  // e n
  std::int64_t min_valuation = 0;       // smallest v(N(u) - 1) observed
  std::uint32_t trials = 0;
  std::uint32_t passed = 0;
  bool sharp = false;  // some trial reached exactly e n
  std::uint64_t seed = 0;
  bool ok() const { return passed == trials; }
};

/// Samples units u = 1 + (series of valuation psi(n)) and checks
/// v(N(u) - 1) >= e n. Throws ErrorCode::precision when the working precision
/// cannot decide this.
NormProbeReport norm_filtration_probe(std::span<const SeriesAutomorphism> group, const RamificationProfile& profile,
                                      std::int64_t n, std::uint32_t trials, std::uint64_t seed);

/// Sampled units of E = F_p((t)), E/F totally ramified of degree e: the set
/// {u : v_E(u - 1) >= e r} equals {u : v_F(u - 1) >= r} with v_F = v_E / e,
/// and both are closed under products. Throws ErrorCode::precision when e r
/// is not below the precision.
bool torus_filtration_check(std::int64_t e, const Rational& r, std::uint32_t samples, std::int64_t precision,
                            std::uint64_t seed = 0, std::uint32_t p = 2);

}  // namespace herbrand
