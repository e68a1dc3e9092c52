#pragma once

#include <stdexcept>
#include <string>

namespace dualspline {

/// Raised when an input violates a documented precondition (bad knot
/// vector, out-of-range index, mismatched spaces).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation is mathematically well posed but numerically
/// degenerate (ill-conditioned Gram matrix, vanishing pivot).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dualspline
