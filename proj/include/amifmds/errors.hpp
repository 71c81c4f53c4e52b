#pragma once

#include <stdexcept>
#include <string>

namespace amifmds {

// Malformed or unusable input data (CSV content, degenerate columns).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical stage could not produce a meaningful result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations on library calls are reported as std::invalid_argument.

}  // namespace amifmds
