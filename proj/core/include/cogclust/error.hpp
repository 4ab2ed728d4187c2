#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cogclust {

// Every library failure derives from Error. The CLI maps the three families
// onto distinct exit codes (parse=2, validation=3, I/O=4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input structure: wrong column count, bad header, unparsable number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed file whose content violates a matrix-format rule (missing or
// asymmetric pair).
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Content that parses but breaks a domain invariant.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotFoundError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Input that satisfies the types but leaves nothing to compute on.
class DegenerateInputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cogclust
