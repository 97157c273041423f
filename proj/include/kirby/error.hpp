#pragma once

#include <stdexcept>
#include <string>

namespace kirby {

enum class ErrorKind {
  Domain,
  DivisionByZero,
  MissingLabel,
  DuplicateLabel,
  FramingNotUnit,
  StrictnessViolation,
  UnknownLinking,
  NonMeridian,
  DuplicateFourHandle,
  HasOneHandles,
  HasHigherHandles,
  UnknownEntries,
  ShapeViolation,
  UnsupportedPair,
  Format,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

/// Every failure raised by the engine. The kind distinguishes precondition
/// violations so callers (the script interpreter, tests) can match on them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kirby
