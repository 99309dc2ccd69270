#include "symplex/error.hpp"

namespace symplex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEmptyOrTotal: return "MissingEmptyOrTotal";
    case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::ComponentNotOpen: return "ComponentNotOpen";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::InvalidOpen: return "InvalidOpen";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::OpenMismatch: return "OpenMismatch";
    case ErrorCode::EmptyOpen: return "EmptyOpen";
    case ErrorCode::NotNowhereZero: return "NotNowhereZero";
    case ErrorCode::ModuleMismatch: return "ModuleMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::NotOrthosymmetric: return "NotOrthosymmetric";
    case ErrorCode::IsotropicSubmodule: return "IsotropicSubmodule";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::OddRank: return "OddRank";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::PartialRelationsViolated: return "PartialRelationsViolated";
    case ErrorCode::PartnerNotFound: return "PartnerNotFound";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotTotallyIsotropic: return "NotTotallyIsotropic";
    case ErrorCode::IsometryHypothesisViolated: return "IsometryHypothesisViolated";
    case ErrorCode::FreenessViolated: return "FreenessViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace symplex
