// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_ERROR_HPP
#define NHCD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nhcd {

enum class ErrorCode {
  NonFinite,
  DimensionMismatch,
  DegenerateSpectrum,
  SelfOrthogonal,
  AmbiguousMatching,
  BadSymmetryMatrix,
  UnpairableSpectrum,
  NotAnEigenvector,
  WindowExceeded,
  NotOrthonormal,
  NotBinormalized,
  SymmetryViolation,
  GridMismatch,
  StepTooLarge,
  ZeroNorm,
  EPCrossing,
  ConfigError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this exception type; code()
/// tells callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace nhcd

#endif  // NHCD_ERROR_HPP
