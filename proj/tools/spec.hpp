#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "herbrand/ramification.hpp"

namespace herbrand::cli {

struct UnramifiedTerm {
  std::int64_t f = 1;
  std::optional<std::int64_t> p;
  bool operator==(const UnramifiedTerm&) const = default;
};
struct TameTerm {
  std::int64_t e = 1;
  std::optional<std::int64_t> p;
  bool operator==(const TameTerm&) const = default;
};
struct ArtinSchreierTerm {
  std::int64_t p = 2;
  std::int64_t m = 1;
  bool operator==(const ArtinSchreierTerm&) const = default;
};
struct CyclotomicTerm {
  std::int64_t p = 2;
  std::int64_t n = 1;
  bool operator==(const CyclotomicTerm&) const = default;
};
struct BreaksTerm {
  std::int64_t p = 2;
  std::int64_t e = 1;
  std::int64_t f = 1;
  std::vector<FiltrationStep> steps;
  bool operator==(const BreaksTerm& o) const;
};

using SpecTerm = std::variant<UnramifiedTerm, TameTerm, ArtinSchreierTerm, CyclotomicTerm, BreaksTerm>;

/// A tower of extensions, base field first.
struct ExtensionSpec {
  std::vector<SpecTerm> terms;
  /// Residue characteristic fixed by some term, if any.
  std::optional<std::int64_t> p;
  bool operator==(const ExtensionSpec&) const = default;
};

/// spec := term ('*' term)*
/// term := NAME '(' [arg (',' arg)*] ')'
/// arg  := [KEY '='] (INT | '[' [pair (',' pair)*] ']')
/// pair := '(' INT ',' INT ')'
/// Syntax errors throw ErrorCode::parse with the byte offset; violated
/// catalog preconditions throw the catalog's error.
ExtensionSpec parse_spec(std::string_view text);
std::string print_spec(const ExtensionSpec& spec);

/// Smallest prime not dividing any tame index in the tower.
std::int64_t default_residue_char(const ExtensionSpec& spec);

/// One profile per term, base first. Terms without an explicit residue
/// characteristic use spec.p, then `fallback_p`, then default_residue_char.
std::vector<RamificationProfile> resolve_tower(const ExtensionSpec& spec,
                                               std::optional<std::int64_t> fallback_p = std::nullopt);

}  // namespace herbrand::cli
