#include "latnorm/error.hpp"

namespace latnorm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotALatticeInducedPoset: return "NotALatticeInducedPoset";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::TopNotCJI: return "TopNotCJI";
    case ErrorCode::NotWeakFMapping: return "NotWeakFMapping";
    case ErrorCode::NotFMapping: return "NotFMapping";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::MissingTopOp: return "MissingTopOp";
    case ErrorCode::MissingGapMap: return "MissingGapMap";
    case ErrorCode::InvalidIntervals: return "InvalidIntervals";
    case ErrorCode::NotOrdinalSumShape: return "NotOrdinalSumShape";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace latnorm
