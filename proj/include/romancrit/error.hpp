#pragma once

#include <stdexcept>
#include <string>

namespace romancrit {

enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  NoSuchEdge,
  EdgeExists,
  Malformed,
  TooLarge,
  InvalidOrder,
  LengthMismatch,
  NotVCritical,
  PreconditionViolated,
  UnknownClaim,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace romancrit
