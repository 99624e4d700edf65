#include "coperm/error.hpp"

namespace coperm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidChar: return "InvalidChar";
    case ErrorCode::TruncatedBody: return "TruncatedBody";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Decode: return "DecodeError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorCode::ShardViolation: return "ShardViolation";
    case ErrorCode::DuplicateMember: return "DuplicateMember";
    case ErrorCode::MixedN: return "MixedN";
    case ErrorCode::UnsortedRun: return "UnsortedRun";
    case ErrorCode::BadRunFile: return "BadRunFile";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return 2;
    case ErrorCode::Overflow:
      return 4;
    case ErrorCode::EdgeCountMismatch:
    case ErrorCode::Internal:
      return 5;
    default:
      return 3;
  }
}

}  // namespace coperm
