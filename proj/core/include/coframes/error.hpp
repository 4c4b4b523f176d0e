#pragma once

#include <stdexcept>
#include <string>

namespace coframes {

/// Raised when an operation's precondition does not hold.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the file readers. `where` names the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Raised when a bounded search ran out of budget before reaching a verdict.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace coframes
