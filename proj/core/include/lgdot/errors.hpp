#pragma once

#include <stdexcept>
#include <string>

namespace lgdot {

// Rejected input: dimension mismatch, negative rate, out-of-range
// parameter, malformed config. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation became meaningless (vanishing trace, vanishing
// conditioning probability).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric postcondition failed (trace drift, hermiticity defect,
// negative eigenvalue beyond tolerance). Indicates a bug or a
// pathological generator, never expected in normal use.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure while writing results.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lgdot
