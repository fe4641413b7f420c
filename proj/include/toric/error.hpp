#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  MalformedInput,
  NonSmoothCone,
  IncompleteFan,
  RankDeficient,
  TorsionFound,
  EliminationSingular,
  DegenerateTopDegree,
  NonIntegralResult,
  NegativeHodgeNumber,
  DivisibilityViolation,
  InconsistentHodgeDiamond,
  AhatNotIntegral,
  UnsupportedDimension,
  ParseError,
  ValidationError,
  UnknownId,
};

std::string_view error_code_name(ErrorCode code);

/// Structured failure raised by every stage of the engine. The code is the
/// stable, machine-checkable part; the message carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric
