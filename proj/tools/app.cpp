#include "app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "herbrand/battery.hpp"
#include "herbrand/depth.hpp"
#include "herbrand/error.hpp"
#include "spec.hpp"

namespace herbrand::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kTowerNote =
    "A tower such as \"tame(2) * as(p=2, m=3)\" is read base field first; its psi is the composite "
    "psi_top o ... o psi_base.";

json to_json(const Rational& r) { return r.to_fraction_string(); }

json to_json(const PiecewiseLinearFn& f) {
  json breaks = json::array();
  for (const auto& b : f.breakpoints()) breaks.push_back({{"x", to_json(b.x)}, {"y", to_json(b.y)}});
  json slopes = json::array();
  for (const auto& s : f.slopes()) slopes.push_back(to_json(s));
  return {{"breaks", breaks}, {"slopes", slopes}};
}

json to_json(const RamificationProfile& p) {
  json steps = json::array();
  for (const auto& s : p.filtration()) steps.push_back({{"break", s.last_index}, {"order", s.order}});
  return {{"p", p.residue_char()},
          {"e", p.inertia_order()},
          {"f", p.residue_degree()},
          {"abelian", p.is_abelian()},
          {"filtration", steps}};
}

json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

json to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].to_string();
  return s;
}

struct Tower {
  ExtensionSpec spec;
  std::vector<RamificationProfile> profiles;
  HerbrandData data;
};

Tower load_tower(const std::string& text, std::optional<std::int64_t> p) {
  auto spec = parse_spec(text);
  auto profiles = resolve_tower(spec, p);
  auto data = HerbrandData::tower(profiles);
  return {std::move(spec), std::move(profiles), std::move(data)};
}

json tower_json(const Tower& t) {
  json profiles = json::array();
  for (const auto& p : t.profiles) profiles.push_back(to_json(p));
  return {{"ext", print_spec(t.spec)}, {"e", t.data.inertia_order()}, {"f", t.data.residue_degree()},
          {"profiles", profiles}};
}

std::int64_t default_precision() {
  const char* env = std::getenv("HERBRAND_PRECISION");
  if (!env || !*env) return 256;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_parameter,
                std::string("HERBRAND_PRECISION must be a positive integer, got '") + env + "'");
  }
}

struct HhArgs {
  std::string ext;
  std::string fn;
  std::string eval;
  bool jumps = false;
  bool json = false;
  std::optional<std::int64_t> p;
};

int run_hh(const HhArgs& a, std::ostream& out) {
  const auto tower = load_tower(a.ext, a.p);
  const auto& f = a.fn == "phi" ? tower.data.phi() : tower.data.psi();
  std::optional<Rational> value;
  if (!a.eval.empty()) value = f(Rational::parse(a.eval));
  const auto jumps = tower.data.upper_jumps();
  if (a.json) {
    json j = tower_json(tower);
    j["fn"] = a.fn;
    j["function"] = to_json(f);
    if (value) j["eval"] = {{"x", to_json(Rational::parse(a.eval))}, {"value", to_json(*value)}};
    if (a.jumps) j["upper_jumps"] = to_json(jumps);
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  if (value) {
    out << value->to_string() << "\n";
  } else {
    out << a.fn << " = " << f.to_string() << "\n";
  }
  if (a.jumps) out << "upper jumps: " << join(jumps) << "\n";
  return kSuccess;
}

struct DepthArgs {
  std::string ext;
  std::string dep;
  std::string kappa = "1";
  bool llc = false, shapiro = false, restrict = false;
  bool json = false;
  std::optional<std::int64_t> p;
};

int run_depth(const DepthArgs& a, std::ostream& out) {
  const auto tower = load_tower(a.ext, a.p);
  const DepthQuery q{Rational::parse(a.dep), Rational::parse(a.kappa)};
  q.validate();
  std::string op;
  Rational result;
  if (a.llc) {
    op = "llc";
    result = depth_llc(q, tower.data);
  } else if (a.shapiro) {
    op = "shapiro";
    result = depth_shapiro(q.depth, tower.data);
  } else {
    op = "restrict";
    result = depth_weil_restriction(q.depth, tower.data.inertia_order());
  }
  if (a.json) {
    json j = tower_json(tower);
    j["operation"] = op;
    j["depth"] = to_json(q.depth);
    j["kappa"] = to_json(q.kappa);
    j["result"] = to_json(result);
    out << j.dump(2) << "\n";
  } else {
    out << result.to_string() << "\n";
  }
  return kSuccess;
}

struct ConductorArgs {
  std::int64_t n = 2;
  std::string dep;
  bool asai = false, ai = false;
  std::string ext;
  bool json = false;
  std::optional<std::int64_t> p;
};

int run_conductor(const ConductorArgs& a, std::ostream& out) {
  const auto data = conductor_from_depth(a.n, Rational::parse(a.dep));
  std::optional<Tower> tower;
  if (a.asai || a.ai) {
    if (a.ext.empty()) throw Error(ErrorCode::invalid_parameter, "--asai and --ai need --ext");
    tower = load_tower(a.ext, a.p);
  }
  json j = {{"n", data.rank}, {"depth", to_json(data.depth)}, {"conductor", to_json(data.conductor)},
            {"swan", to_json(data.swan)}};
  if (tower) j["ext"] = print_spec(tower->spec);
  std::optional<Rational> asai_dep, asai_sw, ai_dep;
  if (a.asai) {
    asai_dep = asai_depth(tower->data, data.depth);
    asai_sw = asai_swan(a.n, tower->data, data.swan);
    j["asai"] = {{"depth", to_json(*asai_dep)}, {"swan", to_json(*asai_sw)}};
  }
  if (a.ai) {
    ai_dep = automorphic_induction_depth(tower->data, data.depth);
    j["automorphic_induction"] = {{"depth", to_json(*ai_dep)}};
  }
  if (a.json) {
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  out << "f = " << data.conductor.str() << ", swan = " << data.swan.to_string() << "\n";
  if (asai_dep) out << "asai: depth = " << asai_dep->to_string() << ", swan = " << asai_sw->to_string() << "\n";
  if (ai_dep) out << "automorphic induction: depth = " << ai_dep->to_string() << "\n";
  return kSuccess;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint32_t trials = 50;
  std::optional<std::int64_t> p, m;
  std::optional<std::int64_t> precision;
  std::int64_t max_n = 5;
  std::uint64_t budget = H1Options{}.budget;
  bool json = false;
  bool verbose = false;
};

CaseRow battery_row(const BatteryRow& r) {
  std::string name = r.check + " g=" + r.group;
  if (r.subgroup != "-") name += " h=" + r.subgroup;
  if (r.normal != "-") name += " N=" + r.normal;
  name += " A=" + r.module;
  std::string expected = r.check == "hom-count" ? "|H1| = |Hom|"
                         : r.check == "inflation" ? "injective"
                         : r.check == "submodule" ? "isomorphism"
                                                  : "bijection";
  std::string measured = std::to_string(r.result.lhs_size) + " / " + std::to_string(r.result.rhs_size);
  if (!r.result.passed) measured += ": " + r.result.detail;
  return {name, expected, measured, r.result.passed};
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::pair<std::string, std::vector<CaseRow>>> suites;
  BatteryOptions battery;
  battery.check.seed = a.seed;
  battery.check.h1.budget = a.budget;
  auto convert = [](const std::vector<BatteryRow>& rows) {
    std::vector<CaseRow> out;
    for (const auto& r : rows) out.push_back(battery_row(r));
    return out;
  };
  if (a.suite == "shapiro" || a.suite == "all") suites.emplace_back("shapiro", convert(run_shapiro_battery(battery)));
  if (a.suite == "cohomology" || a.suite == "all") {
    suites.emplace_back("cohomology", convert(run_cohomology_battery(battery)));
  }
  if (a.suite == "laurent" || a.suite == "all") {
    LaurentOptions lo;
    lo.precision = a.precision ? *a.precision : default_precision();
    lo.trials = a.trials;
    lo.seed = a.seed;
    lo.max_n = a.max_n;
    if (a.p || a.m) {
      if (!a.p || !a.m) throw Error(ErrorCode::invalid_parameter, "--p and --m go together");
      if (*a.p < 2 || *a.p > 65535) throw Error(ErrorCode::invalid_parameter, "p out of range");
      suites.emplace_back("laurent", run_artin_schreier_case(static_cast<std::uint32_t>(*a.p), *a.m, lo));
    } else {
      suites.emplace_back("laurent", run_laurent_battery(lo));
    }
  }
  bool all_pass = true;
  if (a.json) {
    json j = {{"suite", a.suite}, {"seed", a.seed}};
    json results = json::array();
    for (const auto& [suite, rows] : suites) {
      for (const auto& r : rows) {
        results.push_back({{"suite", suite}, {"case", r.name}, {"expected", r.expected}, {"measured", r.measured},
                           {"pass", r.pass}});
        all_pass = all_pass && r.pass;
      }
    }
    j["passed"] = all_pass;
    j["results"] = results;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [suite, rows] : suites) {
      std::size_t passed = 0;
      for (const auto& r : rows) {
        if (r.pass) ++passed;
        if (a.verbose || !r.pass) {
          out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  expected " << r.expected << ", measured "
              << r.measured << "\n";
        }
      }
      out << suite << ": " << passed << "/" << rows.size() << " passed\n";
      all_pass = all_pass && passed == rows.size();
    }
  }
  return all_pass ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hasse-Herbrand functions, depth formulas and verification batteries"};
  app.name("herbrand");
  app.footer(kTowerNote);
  app.require_subcommand(1);

  HhArgs hh;
  auto* hh_cmd = app.add_subcommand("hh", "Print psi or phi of an extension");
  hh_cmd->add_option("--ext", hh.ext, "Extension spec")->required();
  hh_cmd->add_option("--fn", hh.fn, "Function to print")->required()->check(CLI::IsMember({"phi", "psi"}));
  hh_cmd->add_option("--eval", hh.eval, "Evaluate at a rational x >= 0");
  hh_cmd->add_flag("--jumps", hh.jumps, "List the upper jumps");
  hh_cmd->add_flag("--json", hh.json, "JSON output");
  hh_cmd->add_option("--p", hh.p, "Residue characteristic for terms that do not fix one");

  DepthArgs dep;
  auto* dep_cmd = app.add_subcommand("depth", "Transform a depth along an extension");
  dep_cmd->add_option("--ext", dep.ext, "Extension spec")->required();
  dep_cmd->add_option("--dep", dep.dep, "Depth d >= 0")->required();
  dep_cmd->add_option("--kappa", dep.kappa, "Depth-change factor of the base correspondence")->capture_default_str();
  auto* llc = dep_cmd->add_flag("--llc", dep.llc, "phi(kappa e d)");
  auto* sh = dep_cmd->add_flag("--shapiro", dep.shapiro, "psi(d)");
  auto* rs = dep_cmd->add_flag("--restrict", dep.restrict, "e d");
  llc->excludes(sh)->excludes(rs);
  sh->excludes(rs);
  dep_cmd->add_flag("--json", dep.json, "JSON output");
  dep_cmd->add_option("--p", dep.p, "Residue characteristic for terms that do not fix one");

  ConductorArgs cond;
  auto* cond_cmd = app.add_subcommand("conductor", "Conductor and Swan conductor of GL_n from the depth");
  cond_cmd->add_option("--n", cond.n, "Rank n >= 2")->required();
  cond_cmd->add_option("--dep", cond.dep, "Depth d >= 0")->required();
  cond_cmd->add_flag("--asai", cond.asai, "Asai lift along a quadratic --ext");
  cond_cmd->add_flag("--ai", cond.ai, "Automorphic induction along --ext");
  cond_cmd->add_option("--ext", cond.ext, "Extension spec");
  cond_cmd->add_flag("--json", cond.json, "JSON output");
  cond_cmd->add_option("--p", cond.p, "Residue characteristic for terms that do not fix one");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification battery; exit code 1 on any failure");
  ver_cmd->add_option("suite", ver.suite, "shapiro, cohomology, laurent or all")
      ->required()
      ->check(CLI::IsMember({"shapiro", "cohomology", "laurent", "all"}));
  ver_cmd->add_option("--seed", ver.seed, "Random seed")->capture_default_str();
  ver_cmd->add_option("--trials", ver.trials, "Norm probe trials")->capture_default_str();
  ver_cmd->add_option("--p", ver.p, "Single Laurent case: residue characteristic");
  ver_cmd->add_option("--m", ver.m, "Single Laurent case: break");
  ver_cmd->add_option("--prec", ver.precision, "Series precision (default $HERBRAND_PRECISION or 256)");
  ver_cmd->add_option("--max-n", ver.max_n, "Largest n for the norm probe")->capture_default_str();
  ver_cmd->add_option("--budget", ver.budget, "H1 candidate budget per enumeration")->capture_default_str();
  ver_cmd->add_flag("--json", ver.json, "JSON output");
  ver_cmd->add_flag("--verbose", ver.verbose, "Print passing cases too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*hh_cmd) return run_hh(hh, out);
    if (*dep_cmd) {
      if (!dep.llc && !dep.shapiro && !dep.restrict) {
        throw Error(ErrorCode::invalid_parameter, "depth needs one of --llc, --shapiro, --restrict");
      }
      return run_depth(dep, out);
    }
    if (*cond_cmd) return run_conductor(cond, out);
    if (*ver_cmd) return run_verify(ver, out);
  } catch (const Error& e) {
    err << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace herbrand::cli
