#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "herbrand/piecewise_linear.hpp"
#include "herbrand/rational.hpp"

namespace herbrand {

/// One lower-numbering jump: |Gamma_v| = order for every integer v in
/// (previous last_index, last_index]. After the final step the order is 1.
struct FiltrationStep {
  std::int64_t last_index;
  std::int64_t order;
  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// Lower-numbering ramification data of a finite Galois extension E/F.
///
/// Only lower data is stored; upper numbering is always derived through the
/// Herbrand functions.
class RamificationProfile {
 public:
  /// Validates and canonicalises (consecutive equal orders merge, trailing
  /// order-1 steps drop). Throws ErrorCode::invalid_parameter.
  static RamificationProfile make(std::int64_t p, std::int64_t e, std::int64_t f,
                                  std::span<const FiltrationStep> steps, bool abelian);

  std::int64_t residue_char() const { return p_; }
  std::int64_t inertia_order() const { return e_; }
  std::int64_t residue_degree() const { return f_; }
  std::int64_t degree() const { return e_ * f_; }
  bool is_abelian() const { return abelian_; }
  const std::vector<FiltrationStep>& filtration() const { return steps_; }

  /// |Gamma_u| for an integer u >= 0.
  std::int64_t order_at(std::int64_t u) const;

  /// Largest lower break (0 when there is no positive break).
  std::int64_t largest_lower_break() const;

  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

 private:
  RamificationProfile() = default;

  std::int64_t p_ = 2;
  std::int64_t e_ = 1;
  std::int64_t f_ = 1;
  std::vector<FiltrationStep> steps_;
  bool abelian_ = true;
};

namespace catalog {

RamificationProfile unramified(std::int64_t f, std::int64_t p = 2);
RamificationProfile tame(std::int64_t e, std::int64_t p);
/// Degree-p Artin-Schreier extension with its single lower break at m.
RamificationProfile artin_schreier(std::int64_t p, std::int64_t m);
/// Q_p(zeta_{p^n}) / Q_p.
RamificationProfile cyclotomic(std::int64_t p, std::int64_t n);
RamificationProfile from_breaks(std::int64_t p, std::int64_t e, std::int64_t f,
                                std::span<const FiltrationStep> steps, bool abelian = false);

}  // namespace catalog

bool is_prime(std::int64_t n);

/// psi_{E/F}(x) = integral over [0, x] of (Gamma^0 : Gamma^w) dw.
PiecewiseLinearFn build_psi(const RamificationProfile& profile);
/// phi_{E/F}, the inverse of psi_{E/F}.
PiecewiseLinearFn build_phi(const RamificationProfile& profile);

/// Upper jumps in ascending order. 0 is listed whenever the inertia group is
/// nontrivial; positive entries are phi of the positive lower breaks.
std::vector<Rational> upper_jumps(const RamificationProfile& profile);
Rational largest_upper_jump(const RamificationProfile& profile);
bool is_tame(const RamificationProfile& profile);

/// True iff every upper jump is an integer. Requires an abelian profile.
bool hasse_arf_check(const RamificationProfile& profile);

/// psi_{L/F} = psi_{L/E} o psi_{E/F}. Both inputs must be psi-shaped:
/// convex with positive integer slopes.
PiecewiseLinearFn compose_tower_psi(const PiecewiseLinearFn& lower, const PiecewiseLinearFn& upper);

bool is_psi_shaped(const PiecewiseLinearFn& f);

/// Herbrand data for a single extension or a tower of them. Towers are
/// composed at the level of psi; no lower filtration is reconstructed.
class HerbrandData {
 public:
  HerbrandData(const RamificationProfile& profile);  // NOLINT(google-explicit-constructor)
  /// Base-first tower E_1/F, E_2/E_1, ...; an empty tower is F/F.
  static HerbrandData tower(std::span<const RamificationProfile> steps);

  const PiecewiseLinearFn& psi() const { return psi_; }
  const PiecewiseLinearFn& phi() const { return phi_; }
  std::int64_t inertia_order() const { return e_; }
  std::int64_t residue_degree() const { return f_; }
  std::int64_t degree() const { return e_ * f_; }

  /// 0 when ramified, then every point where psi changes slope.
  std::vector<Rational> upper_jumps() const;
  /// Largest upper jump j: the last break of psi (0 if psi is linear).
  Rational largest_upper_jump() const;
  /// psi(j): the largest lower break.
  Rational largest_lower_break() const;
  bool is_tame() const { return largest_upper_jump() == 0; }

 private:
  HerbrandData(PiecewiseLinearFn psi, std::int64_t e, std::int64_t f);

  PiecewiseLinearFn psi_;
  PiecewiseLinearFn phi_;
  std::int64_t e_;
  std::int64_t f_;
};

}  // namespace herbrand
