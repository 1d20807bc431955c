#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcconn {

// Input that violates an operation's precondition (non-regular graph,
// infeasible profile, parity, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A label or vertex index outside its declared range.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Missing configuration an operation needs (label costs, root, ...).
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An exhaustive search whose candidate space exceeds the configured cap.
// Brute force never truncates silently.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, double estimate)
      : std::runtime_error(what + " (estimated " + std::to_string(estimate) +
                           " candidates)"),
        estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// A randomized construction that ran out of retries.
class RetriesExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcconn
