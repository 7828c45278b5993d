#pragma once

#include <stdexcept>
#include <string>

namespace sfg {

enum class ErrorKind {
  MalformedLabel,
  NotPrimePower,
  NotMonic,
  FunctionalEquationViolated,
  RootOffCircle,
  NonConvergence,
  BoundExceeded,
  UnverifiedRelation,
  DenominatorBoundExceeded,
  InvalidTrace,
  UnclassifiedNode,
  NotOrdinary,
  NotSimple,
  InconsistentInputs,
  PrecisionLoss,
  EmbeddingMissing,
  NoMatch,
  InvalidArgument,
  InternalInvariant,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// True for errors caused by the input rather than by a library bug.
bool is_input_error(ErrorKind kind);

}  // namespace sfg
