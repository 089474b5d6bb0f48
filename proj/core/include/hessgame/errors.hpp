#pragma once

#include <stdexcept>
#include <string>

namespace hessgame {

/// Malformed numerical input (non-finite entries, indices out of range, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter combinations the solvers refuse to run with (e.g. eps < 2h).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed quantity breaks a mathematical invariant it must satisfy.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Boundary point where the level function is not differentiable enough.
class SingularPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hessgame
