#include "herbrand/ramification.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_parameter, what); }

bool is_power_of(std::int64_t n, std::int64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::int64_t ipow(std::int64_t b, std::int64_t k) {
  std::int64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RamificationProfile RamificationProfile::make(std::int64_t p, std::int64_t e, std::int64_t f,
                                              std::span<const FiltrationStep> steps, bool abelian) {
  if (!is_prime(p)) bad("residue characteristic p = " + std::to_string(p) + " must be prime");
  if (e < 1) bad("inertia order e must be >= 1");
  if (f < 1) bad("residue degree f must be >= 1");

  std::vector<FiltrationStep> canon;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (s.last_index < 0) bad("filtration breaks must be nonnegative integers");
    if (s.order < 1) bad("filtration orders must be positive");
    if (i > 0 && s.last_index <= steps[i - 1].last_index) bad("filtration breaks must be strictly increasing");
    if (!canon.empty() && canon.back().order == s.order) {
      canon.back().last_index = s.last_index;
    } else {
      canon.push_back(s);
    }
  }
  while (!canon.empty() && canon.back().order == 1) canon.pop_back();

  if (e == 1 && !canon.empty()) bad("an unramified profile (e = 1) has no filtration steps");
  if (e > 1) {
    if (canon.empty() || canon.front().order != e) bad("|Gamma_0| must equal e = " + std::to_string(e));
  }
  for (std::size_t i = 1; i < canon.size(); ++i) {
    if (canon[i].order >= canon[i - 1].order) bad("filtration orders must strictly decrease");
    if (canon[i - 1].order % canon[i].order != 0) bad("each filtration order must divide the previous one");
  }
  for (const auto& s : canon) {
    if (s.last_index >= 1 && !is_power_of(s.order, p)) {
      bad("|Gamma_u| for u >= 1 must be a power of p = " + std::to_string(p));
    }
  }

  RamificationProfile prof;
  prof.p_ = p;
  prof.e_ = e;
  prof.f_ = f;
  prof.steps_ = std::move(canon);
  prof.abelian_ = abelian;
  if (std::gcd(e / prof.order_at(1), p) != 1) bad("tame quotient e / |Gamma_1| must be prime to p");
  return prof;
}

std::int64_t RamificationProfile::order_at(std::int64_t u) const {
  for (const auto& s : steps_) {
    if (u <= s.last_index) return s.order;
  }
  return 1;
}

std::int64_t RamificationProfile::largest_lower_break() const {
  return steps_.empty() ? 0 : steps_.back().last_index;
}

namespace catalog {

RamificationProfile unramified(std::int64_t f, std::int64_t p) {
  return RamificationProfile::make(p, 1, f, {}, true);
}

RamificationProfile tame(std::int64_t e, std::int64_t p) {
  if (e < 1) bad("tame: e must be >= 1");
  if (!is_prime(p)) bad("tame: p = " + std::to_string(p) + " must be prime");
  if (std::gcd(e, p) != 1) bad("tame: gcd(e, p) must be 1");
  std::vector<FiltrationStep> steps;
  if (e > 1) steps.push_back({0, e});
  return RamificationProfile::make(p, e, 1, steps, true);
}

RamificationProfile artin_schreier(std::int64_t p, std::int64_t m) {
  if (!is_prime(p)) bad("artin_schreier: p = " + std::to_string(p) + " must be prime");
  if (m < 1) bad("artin_schreier: m must be >= 1");
  if (std::gcd(m, p) != 1) bad("gcd(m, p) must be 1");
  const FiltrationStep steps[] = {{m, p}};
  return RamificationProfile::make(p, p, 1, steps, true);
}

RamificationProfile cyclotomic(std::int64_t p, std::int64_t n) {
  if (!is_prime(p)) bad("cyclotomic: p = " + std::to_string(p) + " must be prime");
  if (n < 1) bad("cyclotomic: n must be >= 1");
  // |Gamma_0| = p^{n-1}(p-1); Gamma_u is the group over the p^k-th layer,
  // of order p^{n-k}, for p^{k-1} <= u <= p^k - 1.
  const std::int64_t e = ipow(p, n - 1) * (p - 1);
  std::vector<FiltrationStep> steps;
  if (e > 1) steps.push_back({0, e});
  for (std::int64_t k = 1; k < n; ++k) steps.push_back({ipow(p, k) - 1, ipow(p, n - k)});
  return RamificationProfile::make(p, e, 1, steps, true);
}

RamificationProfile from_breaks(std::int64_t p, std::int64_t e, std::int64_t f,
                                std::span<const FiltrationStep> steps, bool abelian) {
  return RamificationProfile::make(p, e, f, steps, abelian);
}

}  // namespace catalog

PiecewiseLinearFn build_psi(const RamificationProfile& profile) {
  // Upper jump of step i: v_i = v_{i-1} + (u_i - u_{i-1}) * g_i / e, and
  // (Gamma^0 : Gamma^w) = e / g_i on (v_{i-1}, v_i].
  const Rational e = profile.inertia_order();
  std::vector<Rational> starts{0};
  std::vector<Rational> slopes;
  Rational v = 0;
  std::int64_t prev_u = 0;
  for (const auto& s : profile.filtration()) {
    if (s.last_index > prev_u) {
      slopes.push_back(e / s.order);
      v += Rational(s.last_index - prev_u) * s.order / e;
      starts.push_back(v);
      prev_u = s.last_index;
    }
  }
  slopes.push_back(e);
  return PiecewiseLinearFn::from_segments(starts, slopes);
}

PiecewiseLinearFn build_phi(const RamificationProfile& profile) { return invert(build_psi(profile)); }

std::vector<Rational> upper_jumps(const RamificationProfile& profile) {
  std::vector<Rational> jumps;
  if (profile.inertia_order() > 1) jumps.push_back(0);
  const auto phi = build_phi(profile);
  for (const auto& s : profile.filtration()) {
    if (s.last_index > 0) jumps.push_back(phi(s.last_index));
  }
  return jumps;
}

Rational largest_upper_jump(const RamificationProfile& profile) {
  const auto jumps = upper_jumps(profile);
  return jumps.empty() ? Rational(0) : jumps.back();
}

bool is_tame(const RamificationProfile& profile) { return largest_upper_jump(profile) == 0; }

bool hasse_arf_check(const RamificationProfile& profile) {
  if (!profile.is_abelian()) {
    throw Error(ErrorCode::not_abelian, "Hasse-Arf applies to abelian extensions only");
  }
  const auto jumps = upper_jumps(profile);
  return std::all_of(jumps.begin(), jumps.end(), [](const Rational& j) { return j.is_integer(); });
}

bool is_psi_shaped(const PiecewiseLinearFn& f) {
  return f.is_convex() && std::all_of(f.slopes().begin(), f.slopes().end(),
                                      [](const Rational& s) { return s.is_integer(); });
}

PiecewiseLinearFn compose_tower_psi(const PiecewiseLinearFn& lower, const PiecewiseLinearFn& upper) {
  if (!is_psi_shaped(lower) || !is_psi_shaped(upper)) {
    bad("tower composition needs convex psi functions with integer slopes");
  }
  return compose(upper, lower);
}

HerbrandData::HerbrandData(PiecewiseLinearFn psi, std::int64_t e, std::int64_t f)
    : psi_(std::move(psi)), phi_(invert(psi_)), e_(e), f_(f) {}

HerbrandData::HerbrandData(const RamificationProfile& profile)
    : HerbrandData(build_psi(profile), profile.inertia_order(), profile.residue_degree()) {}

HerbrandData HerbrandData::tower(std::span<const RamificationProfile> steps) {
  PiecewiseLinearFn psi;
  std::int64_t e = 1, f = 1;
  for (const auto& step : steps) {
    psi = compose_tower_psi(psi, build_psi(step));
    e *= step.inertia_order();
    f *= step.residue_degree();
  }
  return HerbrandData(std::move(psi), e, f);
}

std::vector<Rational> HerbrandData::upper_jumps() const {
  std::vector<Rational> out;
  if (e_ > 1) out.emplace_back(0);
  for (const auto& b : psi_.breakpoints())
    if (b.x > Rational(0)) out.push_back(b.x);
  return out;
}

Rational HerbrandData::largest_upper_jump() const { return psi_.breakpoints().back().x; }

Rational HerbrandData::largest_lower_break() const { return psi_.breakpoints().back().y; }

}  // namespace herbrand
