#pragma once

#include <stdexcept>
#include <string>

namespace coperm {

enum class ErrorCode {
  InvalidChar,
  TruncatedBody,
  TrailingGarbage,
  TooLarge,
  BadPermutation,
  InvalidArgument,
  Io,
  Decode,
  CountMismatch,
  Overflow,
  DegreeMismatch,
  EdgeCountMismatch,
  ShardViolation,
  DuplicateMember,
  MixedN,
  UnsortedRun,
  BadRunFile,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Process exit status for an error, as used by the command-line tool:
// 2 usage, 3 decode/data, 4 arithmetic overflow, 5 internal invariant violation.
int exit_status(ErrorCode code);

}  // namespace coperm
