#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tourtype {

// Base of every library error. Callers that only need "something went wrong"
// catch this; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyType : public Error {
 public:
  using Error::Error;
};

class IllFormed : public Error {
 public:
  using Error::Error;
};

class BadSubset : public Error {
 public:
  using Error::Error;
};

class ScopeTooLarge : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

class TypeTooLong : public Error {
 public:
  using Error::Error;
};

class TooManyVertices : public Error {
 public:
  using Error::Error;
};

class UnknownProperty : public Error {
 public:
  using Error::Error;
};

// Internal consistency failures. These are never expected on valid input and
// signal a bug in a counting kernel.
class ParityViolation : public Error {
 public:
  using Error::Error;
};

class DivisibilityViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tourtype
