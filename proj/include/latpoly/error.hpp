#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latpoly {

enum class ErrorCode {
  DegenerateSimplex,
  DimensionMismatch,
  DimensionTooLarge,
  NoInteriorPoints,
  NotClean,
  NotInterior,
  AlreadyVertex,
  OutsideCarrier,
  FaceNotFound,
  HypothesisFailed,
  InvariantViolation,
  NotSpanning,
  WrongCount,
  NotExterior,
  NotInCellInterior,
  NotUnimodular,
  NotUnimodularSimplex,
  NoLatticeBasisExtension,
  InvalidParameters,
  WrongDimension,
  GcdViolation,
  SpaceTooLarge,
  Overflow,
  ParseError,
  NotConvex,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NoInteriorPoints: return "NoInteriorPoints";
    case ErrorCode::NotClean: return "NotClean";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::AlreadyVertex: return "AlreadyVertex";
    case ErrorCode::OutsideCarrier: return "OutsideCarrier";
    case ErrorCode::FaceNotFound: return "FaceNotFound";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NotExterior: return "NotExterior";
    case ErrorCode::NotInCellInterior: return "NotInCellInterior";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotUnimodularSimplex: return "NotUnimodularSimplex";
    case ErrorCode::NoLatticeBasisExtension: return "NoLatticeBasisExtension";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotConvex: return "NotConvex";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace latpoly
