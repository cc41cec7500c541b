#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace peakparity {

enum class ErrorCode {
  InvalidCharacter,
  ContainsFlat,
  UnbalancedPath,
  BelowGround,
  NotInImage,
  FirstStepNotFlat,
  WrongParityClass,
  UnexpectedUDPair,
  InvalidExpansion,
  InvalidMotzkinOutput,
  IllDefinedParity,
  InvalidTreeEncoding,
  ClaimViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `position()` is the 0-based index the
/// failure refers to (step, pair, node or table row), or -1 when there is none.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message, std::int64_t position = -1)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::int64_t position() const noexcept { return position_; }

private:
  ErrorCode code_;
  std::int64_t position_;
};

} // namespace peakparity
