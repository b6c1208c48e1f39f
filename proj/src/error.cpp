#include "ambig/error.hpp"

namespace ambig {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::EmptyLanguage: return "EMPTY_LANGUAGE";
    case ErrorCode::NotTrim: return "NOT_TRIM";
    case ErrorCode::NotShiftable: return "NOT_SHIFTABLE";
    case ErrorCode::PreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::ExceedsMax: return "EXCEEDS_MAX";
    case ErrorCode::DepthExceeded: return "DEPTH_EXCEEDED";
    case ErrorCode::LengthExceeded: return "LENGTH_EXCEEDED";
    case ErrorCode::HashSymbolClash: return "HASH_SYMBOL_CLASH";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace ambig
