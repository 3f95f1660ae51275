#pragma once

#include <stdexcept>
#include <string>

namespace cubmon {

/// Malformed or out-of-contract input (bad k, dimension mismatch, bad pattern).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A skew form that was required to be unimodular is not.
class DegenerateForm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A construction whose consistency conditions failed on the actual data.
class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search hit its resource cap before it could certify a verdict.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the range of int64.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace cubmon
