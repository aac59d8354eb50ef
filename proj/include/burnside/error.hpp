#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnside {

/// Malformed or inconsistent user input. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error at a byte offset of the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at offset " + std::to_string(position) + ")"),
        position_(position)
  {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource bound (group order cap) would be exceeded.
/// The CLI maps this to exit code 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace burnside
