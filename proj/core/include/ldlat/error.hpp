#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldlat {

enum class ErrorCode {
  NotALattice,
  NotReduced,
  CycleDetected,
  DuplicateElement,
  UnknownElement,
  NoSuchElement,
  TrivialLattice,
  PairNotAdjunctable,
  LabelClash,
  NotLowerDismantlable,
  SyntaxError,
  EmptyGraph,
  InvalidGraph,
  InvalidTree,
  BadPartition,
  HypothesisViolated,
  ClassHasAdjunct,
  NotInClass,
  InternalInconsistency,
  BudgetExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// Error raised while reading or elaborating DSL text; carries the position
/// and spelling of the offending token.
class DiagnosticError : public Error {
 public:
  DiagnosticError(ErrorCode code, SourcePos pos, std::string token,
                  const std::string& message);

  SourcePos pos() const noexcept { return pos_; }
  const std::string& token() const noexcept { return token_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourcePos pos_;
  std::string token_;
  std::string detail_;
};

}  // namespace ldlat
