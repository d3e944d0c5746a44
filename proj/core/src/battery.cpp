#include "herbrand/battery.hpp"

#include <algorithm>

#include "herbrand/error.hpp"

namespace herbrand {

std::vector<NamedGroup> battery_groups() {
  std::vector<NamedGroup> out;
  for (std::uint32_t n = 1; n <= 8; ++n) out.push_back({"C" + std::to_string(n), FiniteGroup::cyclic(n)});
  out.push_back({"V4", FiniteGroup::klein_four()});
  out.push_back({"S3", FiniteGroup::symmetric3()});
  out.push_back({"D4", FiniteGroup::dihedral4()});
  return out;
}

namespace {

ModuleRule trivial_rule(std::string name, FiniteGroup a) {
  return {std::move(name) + " trivial", [a](const FiniteGroup& g) -> std::optional<GGroup> {
            return GGroup::trivial_action(g, a);
          }};
}

ModuleRule sign_rule(std::string name, FiniteGroup a, std::vector<Elem> involution) {
  return {std::move(name), [a, involution](const FiniteGroup& g) -> std::optional<GGroup> {
            auto sign = sign_character(g);
            if (!sign) return std::nullopt;
            return GGroup::twisted_by_sign(g, a, std::move(*sign), involution);
          }};
}

Elem first_involution(const FiniteGroup& a) {
  for (Elem x = 1; x < a.order(); ++x)
    if (a.element_order(x) == 2) return x;
  throw Error(ErrorCode::invalid_structure, a.name() + " has no element of order 2");
}

}  // namespace

std::vector<ModuleRule> battery_modules() {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto z3 = FiniteGroup::cyclic(3);
  const auto z4 = FiniteGroup::cyclic(4);
  const auto s3 = FiniteGroup::symmetric3();
  return {
      trivial_rule("Z2", z2),
      trivial_rule("Z3", z3),
      trivial_rule("Z4", z4),
      trivial_rule("S3", s3),
      sign_rule("Z3 sign-inverted", z3, inversion_map(z3)),
      sign_rule("Z4 sign-inverted", z4, inversion_map(z4)),
      sign_rule("S3 sign-conjugated", s3, conjugation_map(s3, first_involution(s3))),
  };
}

std::string subgroup_label(const std::vector<Elem>& elements) {
  std::string s = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) s += (i ? "," : "") + std::to_string(elements[i]);
  return s + "}";
}

std::uint64_t count_homomorphisms(const FiniteGroup& g, const FiniteGroup& a) {
  const std::size_t n = g.order();
  std::vector<Elem> f(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool hom = true;
    for (Elem x = 0; x < n && hom; ++x)
      for (Elem y = 0; y < n && hom; ++y) hom = f[g.mul(x, y)] == a.mul(f[x], f[y]);
    if (hom) ++count;
    std::size_t i = 0;
    while (i < n && ++f[i] == a.order()) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

namespace {

void emit(std::vector<BatteryRow>& rows, const BatteryOptions& options, BatteryRow row) {
  if (options.on_row) options.on_row(row);
  rows.push_back(std::move(row));
}

std::vector<std::vector<Elem>> normal_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> out;
  for (auto& s : all_subgroups(g))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::vector<BatteryRow> run_shapiro_battery(const BatteryOptions& options) {
  std::vector<BatteryRow> rows;
  const auto modules = battery_modules();
  for (const auto& [gname, g] : battery_groups()) {
    for (const auto& hs : all_subgroups(g)) {
      const auto h = make_subgroup(g, hs, "h");
      for (const auto& rule : modules) {
        const auto m = rule.make(h.group);
        if (!m) continue;
        emit(rows, options,
             {"shapiro", gname, subgroup_label(hs), "-", rule.name, shapiro_check(g, h, *m, options.check)});
      }
    }
  }
  return rows;
}

std::vector<BatteryRow> run_cohomology_battery(const BatteryOptions& options) {
  std::vector<BatteryRow> rows;
  const auto modules = battery_modules();
  for (const auto& [gname, g] : battery_groups()) {
    const auto normals = normal_subgroups(g);
    for (const auto& rule : modules) {
      const auto m = rule.make(g);
      if (!m) continue;
      for (const auto& n : normals) {
        emit(rows, options,
             {"inflation", gname, "-", subgroup_label(n), rule.name,
              inflation_injectivity_check(g, n, *m, options.check)});
      }
    }
    for (const auto& hs : all_subgroups(g)) {
      const auto h = make_subgroup(g, hs, "h");
      for (const auto& rule : modules) {
        const auto m = rule.make(h.group);
        if (!m) continue;
        for (const auto& n : normals) {
          emit(rows, options,
               {"submodule", gname, subgroup_label(hs), subgroup_label(n), rule.name,
                submodule_lemma_check(g, h, n, *m, options.check)});
          emit(rows, options,
               {"refined", gname, subgroup_label(hs), subgroup_label(n), rule.name,
                refined_shapiro_check(g, h, n, *m, options.check)});
        }
      }
    }
    for (const auto& rule : modules) {
      if (rule.name.find("trivial") == std::string::npos) continue;
      const auto m = rule.make(g);
      if (!m->coefficients().is_abelian()) continue;
      CheckResult r;
      r.lhs_size = enumerate_h1(*m, options.check.h1).size();
      r.rhs_size = count_homomorphisms(g, m->coefficients());
      r.passed = r.lhs_size == r.rhs_size;
      if (!r.passed) r.detail = "|H1| differs from |Hom|";
      emit(rows, options, {"hom-count", gname, "-", "-", rule.name, r});
    }
  }
  return rows;
}

std::vector<Rational> sample_points(const Rational& largest_jump, std::size_t count) {
  const Rational top = Rational(3) * largest_jump + Rational(5);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(top * Rational(static_cast<std::int64_t>(i)) / Rational(static_cast<std::int64_t>(count - 1)));
  }
  return out;
}

namespace {

void add_probe_rows(std::vector<CaseRow>& rows, const std::string& prefix, std::span<const SeriesAutomorphism> group,
                    const RamificationProfile& profile, const LaurentOptions& options) {
  for (std::int64_t n = 0; n <= options.max_n; ++n) {
    const auto r = norm_filtration_probe(group, profile, n, options.trials, options.seed);
    rows.push_back({prefix + " norm probe n=" + std::to_string(n),
                    std::to_string(r.trials) + "/" + std::to_string(r.trials) + " with v >= " +
                        std::to_string(r.required_valuation),
                    std::to_string(r.passed) + "/" + std::to_string(r.trials) + ", min v " +
                        std::to_string(r.min_valuation) + (r.sharp ? ", sharp" : "") + ", seed " +
                        std::to_string(r.seed),
                    r.ok()});
  }
}

void add_profile_rows(std::vector<CaseRow>& rows, const std::string& prefix, const RamificationProfile& measured,
                      const RamificationProfile& expected) {
  rows.push_back({prefix + " profile", "catalog", measured == expected ? "catalog" : "differs", measured == expected});
  const auto phi_expected = build_phi(expected);
  const auto phi_measured = build_phi(measured);
  std::size_t agree = 0;
  const auto points = sample_points(largest_upper_jump(expected));
  for (const auto& x : points)
    if (phi_expected(x) == phi_measured(x)) ++agree;
  rows.push_back({prefix + " phi samples", std::to_string(points.size()),
                  std::to_string(agree), agree == points.size()});
}

}  // namespace

std::vector<CaseRow> run_artin_schreier_case(std::uint32_t p, std::int64_t m, const LaurentOptions& options) {
  std::vector<CaseRow> rows;
  const std::string prefix = "as(p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")";
  const auto sigma = as_automorphism(p, m, options.precision);
  const auto order = sigma.order();
  rows.push_back({prefix + " order", std::to_string(p), std::to_string(order), order == p});
  const auto brk = measured_break(sigma);
  rows.push_back({prefix + " break", std::to_string(m), std::to_string(brk), brk == m});
  const std::vector<SeriesAutomorphism> gens{sigma};
  const auto profile = profile_from_group(gens, p, p, options.precision);
  add_profile_rows(rows, prefix, profile, catalog::artin_schreier(p, m));
  const auto group = generated_group(gens, p, options.precision);
  add_probe_rows(rows, prefix, group, profile, options);
  return rows;
}

std::vector<CaseRow> run_tame_case(std::uint32_t p, std::uint32_t e, const LaurentOptions& options) {
  std::vector<CaseRow> rows;
  const std::string prefix = "tame(" + std::to_string(e) + ", p=" + std::to_string(p) + ")";
  const std::vector<SeriesAutomorphism> gens{scaling_automorphism(p, root_of_unity(p, e), options.precision)};
  const auto profile = profile_from_group(gens, p, e, options.precision);
  add_profile_rows(rows, prefix, profile, catalog::tame(e, p));
  const auto group = generated_group(gens, p, options.precision);
  add_probe_rows(rows, prefix, group, profile, options);
  return rows;
}

std::vector<CaseRow> run_laurent_battery(const LaurentOptions& options) {
  std::vector<CaseRow> rows;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::int64_t m = 1; m <= 5; ++m) {
      if (m % p == 0) continue;
      auto r = run_artin_schreier_case(p, m, options);
      rows.insert(rows.end(), r.begin(), r.end());
    }
  }
  for (auto [p, e] : {std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{5u, 4u}}) {
    auto r = run_tame_case(p, e, options);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

}  // namespace herbrand
