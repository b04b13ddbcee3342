#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qaff {

enum class ErrorCode {
  UnknownLabel,
  RankOutOfRange,
  IndexOutOfRange,
  ParseError,
  DivisionByZero,
  ExactDivisionFailed,
  NegativePowerOfNonMonomial,
  EmptyTruncation,
  VertexNotInTruncation,
  FrozenVertex,
  UnknownVertex,
  DependencyCycle,
  MissingFundamental,
  InvalidFundamental,
  InconsistentTSystem,
  NotAdjacent,
  NotThin,
  NotInImageLattice,
  UnsupportedType,
  NotSpecialPosition,
  InvalidRepresentation,
  CorruptCache,
  IoError,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` names
// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ExactDivisionFailed: return "ExactDivisionFailed";
    case ErrorCode::NegativePowerOfNonMonomial: return "NegativePowerOfNonMonomial";
    case ErrorCode::EmptyTruncation: return "EmptyTruncation";
    case ErrorCode::VertexNotInTruncation: return "VertexNotInTruncation";
    case ErrorCode::FrozenVertex: return "FrozenVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DependencyCycle: return "DependencyCycle";
    case ErrorCode::MissingFundamental: return "MissingFundamental";
    case ErrorCode::InvalidFundamental: return "InvalidFundamental";
    case ErrorCode::InconsistentTSystem: return "InconsistentTSystem";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotThin: return "NotThin";
    case ErrorCode::NotInImageLattice: return "NotInImageLattice";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::NotSpecialPosition: return "NotSpecialPosition";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::CorruptCache: return "CorruptCache";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace qaff
