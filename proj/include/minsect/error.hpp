#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minsect {

enum class ErrorCode {
  EmptyInput,
  NonLetterCharacter,
  DuplicateSymbol,
  MissingInverse,
  NotReduced,
  UnknownLetter,
  UnknownPoint,
  SameSegment,
  NotAnIntersection,
  StructureViolation,
  UnmatchedOrdering,
  NotRemovable,
  SearchSpaceTooLarge,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` lets callers
// branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minsect
