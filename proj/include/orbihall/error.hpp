#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbihall {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  IsotropyMismatch,
  NonIntegralCover,
  NonIntegralDegree,
  NonIntegralEquivariantDegree,
  BaseMismatch,
  DimensionMismatch,
  HypothesisViolated,
  OutOfValidRange,
  FluxInconsistency,
  SymmetryBroken,
  NonInvolutive,
  ConvergenceFailure,
  AmbiguousClustering,
  Overflow,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IsotropyMismatch: return "IsotropyMismatch";
    case ErrorCode::NonIntegralCover: return "NonIntegralCover";
    case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorCode::NonIntegralEquivariantDegree: return "NonIntegralEquivariantDegree";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OutOfValidRange: return "OutOfValidRange";
    case ErrorCode::FluxInconsistency: return "FluxInconsistency";
    case ErrorCode::SymmetryBroken: return "SymmetryBroken";
    case ErrorCode::NonInvolutive: return "NonInvolutive";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::AmbiguousClustering: return "AmbiguousClustering";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace orbihall
