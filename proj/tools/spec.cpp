#include "spec.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "herbrand/error.hpp"

namespace herbrand::cli {

bool BreaksTerm::operator==(const BreaksTerm& o) const {
  if (p != o.p || e != o.e || f != o.f || steps.size() != o.steps.size()) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].last_index != o.steps[i].last_index || steps[i].order != o.steps[i].order) return false;
  }
  return true;
}

namespace {

using Steps = std::vector<FiltrationStep>;

struct Arg {
  std::optional<std::string> key;
  std::variant<std::int64_t, Steps> value;
  std::size_t offset = 0;
};

struct RawTerm {
  std::string name;
  std::size_t offset = 0;
  std::vector<Arg> args;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> spec() {
    std::vector<RawTerm> terms{term()};
    while (skip_space(), pos_ < text_.size()) {
      expect('*');
      terms.push_back(term());
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw Error(ErrorCode::parse, what + " at byte " + std::to_string(at));
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) {
      fail(std::string("expected '") + c + "'" +
           (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'" : ", found end of input"));
    }
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) fail("expected a name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer", start);
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_++] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("integer out of range", start);
      value = value * 10 + digit;
    }
    return negative ? -value : value;
  }

  Steps steps() {
    expect('[');
    Steps out;
    if (peek(']')) {
      ++pos_;
      return out;
    }
    do {
      expect('(');
      const std::int64_t u = integer();
      expect(',');
      const std::int64_t g = integer();
      expect(')');
      out.push_back({u, g});
    } while (peek(',') && (++pos_, true));
    expect(']');
    return out;
  }

  Arg arg() {
    skip_space();
    Arg a;
    a.offset = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      a.key = identifier();
      expect('=');
    }
    if (peek('[')) {
      a.value = steps();
    } else {
      a.value = integer();
    }
    return a;
  }

  RawTerm term() {
    skip_space();
    RawTerm t;
    t.offset = pos_;
    t.name = identifier();
    expect('(');
    if (!peek(')')) {
      t.args.push_back(arg());
      while (peek(',')) {
        ++pos_;
        t.args.push_back(arg());
      }
    }
    expect(')');
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void parse_error(const std::string& what, std::size_t at) {
  throw Error(ErrorCode::parse, what + " at byte " + std::to_string(at));
}

// Binds positional and keyword arguments to the parameter names of a term.
struct Bound {
  std::map<std::string, Arg> args;

  bool has(const std::string& key) const { return args.count(key) != 0; }
  std::int64_t integer(const std::string& key) const {
    const auto& a = args.at(key);
    if (!std::holds_alternative<std::int64_t>(a.value)) parse_error("'" + key + "' must be an integer", a.offset);
    return std::get<std::int64_t>(a.value);
  }
  std::optional<std::int64_t> optional_integer(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }
  Steps steps(const std::string& key) const {
    const auto& a = args.at(key);
    if (!std::holds_alternative<Steps>(a.value)) parse_error("'" + key + "' must be a list of (u, g) pairs", a.offset);
    return std::get<Steps>(a.value);
  }
};

Bound bind(const RawTerm& t, const std::vector<std::string>& params, std::size_t required) {
  Bound b;
  std::size_t next = 0;
  bool seen_keyword = false;
  for (const auto& a : t.args) {
    std::string key;
    if (a.key) {
      seen_keyword = true;
      key = *a.key;
      if (std::find(params.begin(), params.end(), key) == params.end()) {
        parse_error(t.name + "() has no parameter '" + key + "'", a.offset);
      }
    } else {
      if (seen_keyword) parse_error("positional argument after keyword argument", a.offset);
      if (next >= params.size()) parse_error(t.name + "() takes at most " + std::to_string(params.size()) +
                                                 " arguments", a.offset);
      key = params[next++];
    }
    if (!b.args.emplace(key, a).second) parse_error("duplicate argument '" + key + "'", a.offset);
  }
  for (std::size_t i = 0; i < required; ++i) {
    if (!b.has(params[i])) parse_error(t.name + "() is missing '" + params[i] + "'", t.offset);
  }
  return b;
}

SpecTerm to_term(const RawTerm& t) {
  if (t.name == "unram") {
    const auto b = bind(t, {"f", "p"}, 1);
    return UnramifiedTerm{b.integer("f"), b.optional_integer("p")};
  }
  if (t.name == "tame") {
    const auto b = bind(t, {"e", "p"}, 1);
    return TameTerm{b.integer("e"), b.optional_integer("p")};
  }
  if (t.name == "as") {
    const auto b = bind(t, {"p", "m"}, 2);
    return ArtinSchreierTerm{b.integer("p"), b.integer("m")};
  }
  if (t.name == "cyclo") {
    const auto b = bind(t, {"p", "n"}, 2);
    return CyclotomicTerm{b.integer("p"), b.integer("n")};
  }
  if (t.name == "breaks") {
    const auto b = bind(t, {"p", "e", "f", "steps"}, 4);
    return BreaksTerm{b.integer("p"), b.integer("e"), b.integer("f"), b.steps("steps")};
  }
  parse_error("unknown extension '" + t.name + "' (expected unram, tame, as, cyclo or breaks)", t.offset);
}

std::optional<std::int64_t> fixed_char(const SpecTerm& term) {
  return std::visit(
      [](const auto& t) -> std::optional<std::int64_t> { return t.p; }, term);
}

RamificationProfile profile_of(const SpecTerm& term, std::int64_t p) {
  struct Visitor {
    std::int64_t p;
    RamificationProfile operator()(const UnramifiedTerm& t) const { return catalog::unramified(t.f, p); }
    RamificationProfile operator()(const TameTerm& t) const { return catalog::tame(t.e, p); }
    RamificationProfile operator()(const ArtinSchreierTerm& t) const { return catalog::artin_schreier(t.p, t.m); }
    RamificationProfile operator()(const CyclotomicTerm& t) const { return catalog::cyclotomic(t.p, t.n); }
    RamificationProfile operator()(const BreaksTerm& t) const {
      return catalog::from_breaks(t.p, t.e, t.f, t.steps);
    }
  };
  return std::visit(Visitor{p}, term);
}

std::string print_term(const SpecTerm& term) {
  struct Visitor {
    std::string operator()(const UnramifiedTerm& t) const {
      return "unram(" + std::to_string(t.f) + (t.p ? ", p=" + std::to_string(*t.p) : "") + ")";
    }
    std::string operator()(const TameTerm& t) const {
      return "tame(" + std::to_string(t.e) + (t.p ? ", p=" + std::to_string(*t.p) : "") + ")";
    }
    std::string operator()(const ArtinSchreierTerm& t) const {
      return "as(p=" + std::to_string(t.p) + ", m=" + std::to_string(t.m) + ")";
    }
    std::string operator()(const CyclotomicTerm& t) const {
      return "cyclo(p=" + std::to_string(t.p) + ", n=" + std::to_string(t.n) + ")";
    }
    std::string operator()(const BreaksTerm& t) const {
      std::string s = "breaks(p=" + std::to_string(t.p) + ", e=" + std::to_string(t.e) + ", f=" + std::to_string(t.f) +
                      ", steps=[";
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        s += (i ? ", (" : "(") + std::to_string(t.steps[i].last_index) + ", " + std::to_string(t.steps[i].order) + ")";
      }
      return s + "])";
    }
  };
  return std::visit(Visitor{}, term);
}

}  // namespace

ExtensionSpec parse_spec(std::string_view text) {
  Parser parser(text);
  const auto raw = parser.spec();
  ExtensionSpec spec;
  for (const auto& t : raw) {
    auto term = to_term(t);
    if (auto p = fixed_char(term)) {
      if (spec.p && *spec.p != *p) {
        throw Error(ErrorCode::invalid_parameter, "residue characteristic p=" + std::to_string(*p) +
                                                      " conflicts with p=" + std::to_string(*spec.p) +
                                                      " (term at byte " + std::to_string(t.offset) + ")");
      }
      spec.p = p;
    }
    // Check the catalog preconditions now, with a placeholder characteristic
    // for terms that do not fix one; resolve_tower redoes this with the real p.
    try {
      if (fixed_char(term)) {
        (void)profile_of(term, *fixed_char(term));
      } else if (const auto* tame = std::get_if<TameTerm>(&term); tame && tame->e < 1) {
        throw Error(ErrorCode::invalid_parameter, "e must be positive");
      } else if (const auto* un = std::get_if<UnramifiedTerm>(&term); un && un->f < 1) {
        throw Error(ErrorCode::invalid_parameter, "f must be positive");
      }
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (term at byte " + std::to_string(t.offset) + ")");
    }
    spec.terms.push_back(std::move(term));
  }
  return spec;
}

std::string print_spec(const ExtensionSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.terms.size(); ++i) out += (i ? " * " : "") + print_term(spec.terms[i]);
  return out;
}

std::int64_t default_residue_char(const ExtensionSpec& spec) {
  if (spec.p) return *spec.p;
  for (std::int64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    bool coprime = true;
    for (const auto& term : spec.terms)
      if (const auto* t = std::get_if<TameTerm>(&term); t && t->e % p == 0) coprime = false;
    if (coprime) return p;
  }
}

std::vector<RamificationProfile> resolve_tower(const ExtensionSpec& spec, std::optional<std::int64_t> fallback_p) {
  const std::int64_t p = spec.p ? *spec.p : fallback_p ? *fallback_p : default_residue_char(spec);
  std::vector<RamificationProfile> out;
  for (const auto& term : spec.terms) out.push_back(profile_of(term, fixed_char(term).value_or(p)));
  return out;
}

}  // namespace herbrand::cli
