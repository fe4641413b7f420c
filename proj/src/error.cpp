#include "toric/error.hpp"
#include "toric/numeric.hpp"

#include <limits>

namespace toric {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NonSmoothCone: return "NonSmoothCone";
    case ErrorCode::IncompleteFan: return "IncompleteFan";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TorsionFound: return "TorsionFound";
    case ErrorCode::EliminationSingular: return "EliminationSingular";
    case ErrorCode::DegenerateTopDegree: return "DegenerateTopDegree";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::NegativeHodgeNumber: return "NegativeHodgeNumber";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::InconsistentHodgeDiamond: return "InconsistentHodgeDiamond";
    case ErrorCode::AhatNotIntegral: return "AhatNotIntegral";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownId: return "UnknownId";
  }
  return "Unknown";
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + z.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(z);
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

}  // namespace toric
