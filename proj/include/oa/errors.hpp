#pragma once

#include <stdexcept>
#include <string>

namespace oa {

enum class ErrorKind {
  DuplicateArcEnd,
  ModeViolation,
  Disconnected,
  CrossingArcs,
  StaleAngle,
  NotASolution,
  CensusMismatch,
  MultipleCommonNeighbours,
  NotSimpleFace,
  EndpointNotFound,
  GatherBlocked,
  UnknownArc,
  NotACandidate,
  NonGadgetArcInY,
  BudgetTooLargeForOracle,
  InvalidArity,
  EmbeddingConflict,
  AssignmentDoesNotSatisfy,
  ParseError,
  InfeasibleParameters,
  UsageError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oa
