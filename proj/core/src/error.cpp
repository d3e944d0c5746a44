#include "herbrand/error.hpp"

namespace herbrand {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "E_DOMAIN";
    case ErrorCode::invalid_parameter: return "E_INVALID_PARAMETER";
    case ErrorCode::invalid_structure: return "E_INVALID_STRUCTURE";
    case ErrorCode::budget_exceeded: return "E_BUDGET";
    case ErrorCode::precision: return "E_PRECISION";
    case ErrorCode::not_abelian: return "E_NOT_ABELIAN";
    case ErrorCode::degree: return "E_DEGREE";
    case ErrorCode::non_integral: return "E_NON_INTEGRAL";
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::closure: return "E_CLOSURE";
  }
  return "E_UNKNOWN";
}

}  // namespace herbrand
