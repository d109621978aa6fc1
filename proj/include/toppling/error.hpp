#pragma once

#include <stdexcept>
#include <string>

namespace toppling {

enum class ErrorKind {
  // graph-core
  LoopEdge,
  Disconnected,
  BadVertex,
  EmptyGraph,
  BadMultiplicity,
  TooLarge,
  EmptySet,
  Overlap,
  // divisor-theory
  NegativeOffQ,
  // flags
  MissingQ,
  NotIncreasing,
  LastNotV,
  PartDisconnected,
  PrefixDisconnected,
  LengthMismatch,
  BadK,
  TooShort,
  TailMismatch,
  BadPartIndex,
  NotMinimalRep,
  NotMergedFrom,
  NotAFlag,
  // resolution / oracle
  LeadingTermMismatch,
  CompositionNonzero,
  UnitEntry,
  IdentityViolation,
  NotGroebner,
  // io
  Parse,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int index = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        index_(index) {}

  ErrorKind kind() const { return kind_; }
  // Offending position for errors that carry one (flag level, line number).
  int index() const { return index_; }

 private:
  ErrorKind kind_;
  int index_;
};

}  // namespace toppling
