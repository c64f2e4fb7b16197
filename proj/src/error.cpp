#include "romancrit/error.hpp"

namespace romancrit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::EdgeExists: return "EdgeExists";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotVCritical: return "NotVCritical";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace romancrit
