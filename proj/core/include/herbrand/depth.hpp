#pragma once

#include <cstdint>
#include <optional>

#include "herbrand/ramification.hpp"
#include "herbrand/rational.hpp"

namespace herbrand {

/// A depth d >= 0 together with the depth-change factor kappa > 0 of the
/// base correspondence (kappa = 1 when it is depth-preserving).
struct DepthQuery {
  Rational depth;
  Rational kappa{1};

  /// Throws ErrorCode::domain unless depth >= 0 and kappa > 0.
  void validate() const;
};

/// Conductor data of an irreducible representation of GL_n.
struct GLnData {
  std::int64_t rank;
  BigInt conductor;
  Rational swan;   // (conductor - n) / n
  Rational depth;
};

/// Depth after pulling back along the Weil-restriction isomorphism: e * d.
Rational depth_weil_restriction(const Rational& d, std::int64_t inertia_order);
Rational depth_weil_restriction(const Rational& d, const RamificationProfile& profile);

/// Depth of the Shapiro image of a parameter of depth d: psi_{E/F}(d).
Rational depth_shapiro(const Rational& d, const HerbrandData& ext);

/// phi_{E/F}(kappa * e * d).
Rational depth_llc(const DepthQuery& q, const HerbrandData& ext);

struct DepthPreservation {
  bool preserving;
  std::optional<Rational> witness;  // a depth d > 0 that moves, when not preserving
};

/// Preserving iff tame. The witness is the largest upper jump j, which
/// moves because e * j > psi(j) exactly in the wild case.
DepthPreservation is_depth_preserving(const HerbrandData& ext);

/// c with depth_llc(d, 1) = d + c for every d >= u / e, where u = psi(j) is
/// the largest lower break: c = phi(u) - u / e.
Rational depth_ratio_constant(const HerbrandData& ext);

/// Verifies phi(e * d) > d for one d > 0. Throws on a tame extension.
bool wild_strict_increase_check(const HerbrandData& ext, const Rational& d);

/// Essentially square-integrable GL_n data with f = n * d + n (n >= 2).
GLnData conductor_from_depth(std::int64_t n, const Rational& d);
/// (f - n) / n.
Rational swan_from_conductor(std::int64_t n, const BigInt& conductor);

/// Depth of the automorphic induction of a depth-d representation: phi(d).
Rational automorphic_induction_depth(const HerbrandData& ext, const Rational& d);

/// Asai lift for a quadratic E/F. Both throw ErrorCode::degree unless
/// [E:F] = e * f = 2.
Rational asai_depth(const HerbrandData& ext, const Rational& d);
Rational asai_swan(std::int64_t n, const HerbrandData& ext, const Rational& swan);

}  // namespace herbrand
