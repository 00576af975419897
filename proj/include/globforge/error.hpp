#pragma once

#include <stdexcept>
#include <string>

namespace globforge {

enum class ErrorKind {
  DimensionOutOfRange,
  GradeMismatch,
  UnknownCell,
  DuplicateDeclaration,
  NoInverse,
  AmbiguousInverse,
  MalformedWord,
  IllTypedTerm,
  UnsupportedDimension,
  SectionViolation,
  NoMatch,
  SideConditionViolated,
  ParseError,
  UnresolvedIdentifier,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-checkable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace globforge
