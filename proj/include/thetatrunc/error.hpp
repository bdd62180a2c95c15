#pragma once

#include <stdexcept>
#include <string>

namespace thetatrunc {

enum class ErrorCode {
  InvalidArgument,
  NonUnitConstantTerm,
  NonIntegralExponent,
  InsufficientRange,
  UnsupportedOrder,
  SectorViolation,
  MainArcViolation,
  BandwidthTooSmall,
  RangeViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// layer translates them one-to-one into tt_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace thetatrunc
