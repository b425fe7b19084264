#pragma once

#include <stdexcept>
#include <string>

namespace hoising {

/// Malformed input or a violated precondition on user-supplied data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-finite value appeared inside the dynamics. Always an upstream bug.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hoising
