#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamwb {

// Base of every error raised by the workbench. The CLI maps subclasses to
// exit codes (syntax/usage -> 2, cap -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

// Formula mentions a variable the evaluation context does not declare, or a
// context is malformed.
class ContextError : public Error {
 public:
  using Error::Error;
};

// Context size, pool size or another enumeration bound exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace teamwb
