#pragma once

#include <stdexcept>
#include <string>

namespace pts {

// Base class for all input/contract violations surfaced to callers.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in one of the text formats; position is a 0-based offset
// into the parsed string.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& message, std::size_t pos)
      : Error(message + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace pts
