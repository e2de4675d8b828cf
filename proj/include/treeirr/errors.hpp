#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeirr {

// Raised when a sweep or enumeration would exceed its configured size cap.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by formula evaluators when an input lies outside the declared domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Edge-list parse failure. line() is 1-based, or 0 for whole-document errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace treeirr
