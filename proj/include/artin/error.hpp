#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Malformed input text (presentation files, word strings, trace JSON).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A move does not match the word it is applied to.
class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The presentation is outside the supported class.
class OutOfScope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested construction is not implemented for this input shape.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace artin

namespace artin {

// A search bound was exhausted without a certificate either way.
class Indeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace artin
