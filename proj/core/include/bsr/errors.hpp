#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsr {

// Operands live in rings with different numbers of variables.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates an operation's documented domain (non-prime p, unit ideal
// where a proper one is required, radical condition fails, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation blew past its configured budget (enumeration size, chain
// length, branch-and-bound nodes). The message names the bound that tripped.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input; `position` is a byte offset into the
// original string where scanning stopped (0 when not meaningful).
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bsr
