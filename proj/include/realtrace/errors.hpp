#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realtrace {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something malformed: unknown letter, duplicate symbol,
// alphabet mismatch, isolated letter, bad file contents.
class InputError : public Error {
 public:
  using Error::Error;
};

// A line-oriented text file could not be parsed.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An operation was called outside its domain (index out of range, a
// documented precondition does not hold, a size guard was exceeded).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace realtrace
