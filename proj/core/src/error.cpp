#include "ldlat/error.hpp"

namespace ldlat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NoSuchElement: return "NoSuchElement";
    case ErrorCode::TrivialLattice: return "TrivialLattice";
    case ErrorCode::PairNotAdjunctable: return "PairNotAdjunctable";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::NotLowerDismantlable: return "NotLowerDismantlable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ClassHasAdjunct: return "ClassHasAdjunct";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

namespace {

std::string format_diagnostic(SourcePos pos, const std::string& token,
                              const std::string& message) {
  std::string out = std::to_string(pos.line) + ":" +
                    std::to_string(pos.column) + ": " + message;
  if (!token.empty()) out += " (at '" + token + "')";
  return out;
}

}  // namespace

DiagnosticError::DiagnosticError(ErrorCode code, SourcePos pos,
                                 std::string token, const std::string& message)
    : Error(code, format_diagnostic(pos, token, message)),
      pos_(pos),
      token_(std::move(token)),
      detail_(message) {}

}  // namespace ldlat
