#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace herbrand {

/// Stable error categories. The CLI prints `code_name(code)` next to every
/// message, so the names must not change between releases.
enum class ErrorCode {
  domain,              // argument outside the mathematical domain
  invalid_parameter,   // catalog / constructor precondition violated
  invalid_structure,   // group axioms, subgroup or normality check failed
  budget_exceeded,     // enumeration would exceed the configured budget
  precision,           // truncated series ran out of significant terms
  not_abelian,         // Hasse-Arf requested on a non-abelian profile
  degree,              // [E:F] guard (Asai lift)
  non_integral,        // conductor would not be an integer
  parse,               // extension-spec syntax error
  closure,             // automorphism set does not close into a group
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace herbrand
