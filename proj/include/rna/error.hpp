#pragma once

#include <stdexcept>

namespace rna {

// Bad argument: malformed graph, out-of-range parameter, non-bijective labeling.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a fixed capacity (64 vertices) or a solver's enumeration guard.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A file could not be read or written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rna
