#pragma once

#include <stdexcept>
#include <string>

namespace gradedq {

/// Library-wide error type. Thrown on contract violations (mismatched
/// charts, singular denominators, failed internal cross-checks).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse errors carry the byte offset into the source expression.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace gradedq
