#pragma once

#include <stdexcept>
#include <string>

namespace udval {

/// Machine-readable failure categories carried by every DomainError.
enum class ErrorCode {
  invalid_input,
  parse_error,
  not_intersection_closed,
  grand_coalition_missing,
  not_p_extendable,
  ud_not_unique,
  unsupported,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::not_intersection_closed: return "not_intersection_closed";
    case ErrorCode::grand_coalition_missing: return "grand_coalition_missing";
    case ErrorCode::not_p_extendable: return "not_p_extendable";
    case ErrorCode::ud_not_unique: return "ud_not_unique";
    case ErrorCode::unsupported: return "unsupported";
  }
  return "unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw DomainError(code, message);
}

}  // namespace udval
