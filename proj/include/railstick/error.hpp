#pragma once

#include <stdexcept>
#include <string>

namespace railstick {

/// Raised for malformed input or a violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a bounded construction (perturbation, angle search, routing) gives up.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace railstick
