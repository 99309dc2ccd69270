#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace symplex {

enum class ErrorCode {
  // topology
  MissingEmptyOrTotal,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  ComponentNotOpen,
  UnknownPoint,
  InvalidOpen,
  NotASubset,
  // algebra
  InvalidField,
  FieldMismatch,
  OpenMismatch,
  EmptyOpen,
  NotNowhereZero,
  // module
  ModuleMismatch,
  DimensionMismatch,
  NotFree,
  // bilinear
  NotOrthosymmetric,
  IsotropicSubmodule,
  Singular,
  // symplectic
  OddRank,
  NotAlternating,
  Degenerate,
  PartialRelationsViolated,
  PartnerNotFound,
  RankMismatch,
  NotTotallyIsotropic,
  IsometryHypothesisViolated,
  FreenessViolated,
  // io / cli
  ParseError,
  UnknownSuite,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this exception. `witness`
/// carries machine-readable detail (offending pair, open set, ...) when the
/// error is mathematical rather than a usage mistake.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace symplex
