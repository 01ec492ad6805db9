#include "minsect/error.hpp"

namespace minsect {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonLetterCharacter: return "NonLetterCharacter";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::SameSegment: return "SameSegment";
    case ErrorCode::NotAnIntersection: return "NotAnIntersection";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::UnmatchedOrdering: return "UnmatchedOrdering";
    case ErrorCode::NotRemovable: return "NotRemovable";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  }
  return "Unknown";
}

}  // namespace minsect
