#pragma once

#include <stdexcept>
#include <string>

namespace dualis {

// Raised when an input violates a documented precondition. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input is well-formed but exceeds a configured size cap.
class TooLargeError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace dualis
