#pragma once

#include <stdexcept>
#include <string>

namespace hca {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotSymmetric,
  NotAntisymmetric,
  NotSelfAdjoint,
  NotCommuting,
  NonConsecutiveStates,
  TooShort,
  BoundarySite,
  ZeroVariation,
  OutOfRange,
  DimensionTooLarge,
  EmptyWindow,
  NonFiniteTime,
  OutsideTrustedRegion,
  NotHermitian,
  NoConvergence,
  UnstableSpectrum,
  StabilityViolated,
  TooFewScales,
  FloatOverflow,
  NonConstantLapse,
  ParseError,
  IoError,
  ConfigError,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
/// All library entry points report failures through this type.
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

}  // namespace hca
