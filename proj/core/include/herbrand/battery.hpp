#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "herbrand/cohomology.hpp"
#include "herbrand/laurent.hpp"

namespace herbrand {

/// A named acting group of the fixed verification battery.
struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// A coefficient group together with a rule for letting a given acting group
/// act on it. `make` returns nothing when the rule does not apply (for
/// example a sign-twisted action on a group without an index-2 subgroup).
struct ModuleRule {
  std::string name;
  std::function<std::optional<GGroup>(const FiniteGroup& acting)> make;
};

/// C_1 .. C_8, V_4, S_3, D_4.
std::vector<NamedGroup> battery_groups();
/// Z/2, Z/3, Z/4, S_3 with trivial action; Z/3, Z/4 twisted by inversion and
/// S_3 twisted by conjugation with a transposition, through a sign character.
std::vector<ModuleRule> battery_modules();

struct BatteryRow {
  std::string check;  // shapiro, inflation, submodule, refined, hom-count
  std::string group;
  std::string subgroup;  // subgroup h, or "-"
  std::string normal;    // normal subgroup, or "-"
  std::string module;
  CheckResult result;
};

struct BatteryOptions {
  CheckOptions check;
  /// Called after every row, for progress output.
  std::function<void(const BatteryRow&)> on_row;
};

/// Shapiro bijection for every acting group, subgroup and module rule.
std::vector<BatteryRow> run_shapiro_battery(const BatteryOptions& options = {});

/// Inflation injectivity, the submodule lemma and the refined Shapiro
/// isomorphism over every normal subgroup, plus |H^1| = |Hom| for trivial
/// action on abelian coefficients.
std::vector<BatteryRow> run_cohomology_battery(const BatteryOptions& options = {});

/// Number of homomorphisms g -> a, by testing every map g -> a.
std::uint64_t count_homomorphisms(const FiniteGroup& g, const FiniteGroup& a);

/// One measured quantity of the series battery.
struct CaseRow {
  std::string name;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct LaurentOptions {
  std::int64_t precision = 256;
  std::uint32_t trials = 50;
  std::uint64_t seed = 0;
  std::int64_t max_n = 5;
};

/// as_automorphism(p, m): order, measured break, measured profile against
/// the catalog, phi at 20 points, and the norm probe for n = 0 .. max_n.
std::vector<CaseRow> run_artin_schreier_case(std::uint32_t p, std::int64_t m, const LaurentOptions& options = {});
/// t -> zeta t with zeta of order e: measured profile and the norm probe.
std::vector<CaseRow> run_tame_case(std::uint32_t p, std::uint32_t e, const LaurentOptions& options = {});
/// Artin-Schreier cases for p in {2, 3, 5}, m <= 5 coprime to p, plus tame
/// cases (3, 2), (5, 2), (5, 4).
std::vector<CaseRow> run_laurent_battery(const LaurentOptions& options = {});

/// 20 evenly spaced points of [0, 3 j + 5] for the largest upper jump j.
std::vector<Rational> sample_points(const Rational& largest_jump, std::size_t count = 20);

/// Short label for a subgroup such as "{0,2}".
std::string subgroup_label(const std::vector<Elem>& elements);

}  // namespace herbrand
