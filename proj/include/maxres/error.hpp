#pragma once

#include <stdexcept>
#include <string>

namespace maxres {

// Precondition or contract violation raised by an operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (WCNF, proof traces, circular proofs).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace maxres
