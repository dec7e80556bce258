// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/error.hpp"

namespace nhcd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::SelfOrthogonal: return "SelfOrthogonal";
    case ErrorCode::AmbiguousMatching: return "AmbiguousMatching";
    case ErrorCode::BadSymmetryMatrix: return "BadSymmetryMatrix";
    case ErrorCode::UnpairableSpectrum: return "UnpairableSpectrum";
    case ErrorCode::NotAnEigenvector: return "NotAnEigenvector";
    case ErrorCode::WindowExceeded: return "WindowExceeded";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotBinormalized: return "NotBinormalized";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::EPCrossing: return "EPCrossing";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace nhcd
