#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gclr {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The instance admits no partition (I < K*n), or a restricted problem has no
// feasible point.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// min L_i * n <= J + 1: clusters could fit their data exactly.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A size guard on an exhaustive routine was exceeded.
class RefusalError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace gclr
