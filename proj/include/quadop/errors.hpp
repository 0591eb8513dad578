#pragma once

#include <stdexcept>

namespace quadop {

/// Bad user input: unknown names, malformed identities, invalid generator data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical self-consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quadop
