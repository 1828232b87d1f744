#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphsep {

// Invalid argument: out-of-range coordinates, bad profiles, order mismatches.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A density matrix was requested for a graph with no edges.
class ZeroTraceError : public DomainError {
 public:
  ZeroTraceError() : DomainError("zero trace: density matrix undefined for a graph with no edges") {}
};

// Malformed graph or decomposition text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace graphsep
