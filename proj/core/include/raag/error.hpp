#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Input violates an operation's precondition (unknown vertex, wrong shape, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input graph is empty where a nonempty graph is required.
class EmptyGraphError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Graph is outside the hypotheses of the JSJ construction:
/// connected, at least three vertices.
class JsjPreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input exceeds a fixed capacity limit (clique enumeration, graph6 size).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace raag
