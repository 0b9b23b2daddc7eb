#pragma once

#include <stdexcept>

namespace expquad {

// Failure of an iterative or algebraic kernel (eigensolve, root finding).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unusable input or output location (unreadable/unwritable path).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expquad
