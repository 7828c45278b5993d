#include "sfg/error.hpp"

namespace sfg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLabel: return "MalformedLabel";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::FunctionalEquationViolated: return "FunctionalEquationViolated";
    case ErrorKind::RootOffCircle: return "RootOffCircle";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::UnverifiedRelation: return "UnverifiedRelation";
    case ErrorKind::DenominatorBoundExceeded: return "DenominatorBoundExceeded";
    case ErrorKind::InvalidTrace: return "InvalidTrace";
    case ErrorKind::UnclassifiedNode: return "UnclassifiedNode";
    case ErrorKind::NotOrdinary: return "NotOrdinary";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::InconsistentInputs: return "InconsistentInputs";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    case ErrorKind::EmbeddingMissing: return "EmbeddingMissing";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLabel:
    case ErrorKind::NotPrimePower:
    case ErrorKind::NotMonic:
    case ErrorKind::FunctionalEquationViolated:
    case ErrorKind::RootOffCircle:
    case ErrorKind::InvalidTrace:
    case ErrorKind::NotOrdinary:
    case ErrorKind::NotSimple:
    case ErrorKind::InvalidArgument:
    case ErrorKind::PrecisionLoss:
    case ErrorKind::BoundExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace sfg
