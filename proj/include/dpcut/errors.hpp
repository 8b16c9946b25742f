#pragma once

#include <stdexcept>
#include <string>

namespace dpcut {

/// Malformed input: bad edge list, invalid parameters, violated preconditions.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was asked to run above its configured vertex cap.
class CapExceeded : public InputError {
public:
  CapExceeded(const std::string& what, std::size_t n, std::size_t cap)
      : InputError(what + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap)) {}
};

}  // namespace dpcut
