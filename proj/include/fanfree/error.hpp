#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanfree {

/// Caller passed arguments outside an operation's domain.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Result would exceed a fixed capacity (vertex limit, exact-search size).
class capacity_error : public std::length_error {
public:
  using std::length_error::length_error;
};

/// An operation's stated precondition does not hold for the given graph.
class precondition_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed serialized input. `offset()` is the byte (or line) position.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace fanfree
