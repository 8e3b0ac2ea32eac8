#pragma once

#include <stdexcept>
#include <string>

namespace spinclab {

// Exit-code contract for the CLI and for library callers:
// precondition_error = bad input or unusable configuration (exit 1),
// internal_error = an invariant the library itself must maintain failed (exit 2).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace spinclab
