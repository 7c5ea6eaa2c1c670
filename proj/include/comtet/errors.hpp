#pragma once

#include <stdexcept>
#include <string>

namespace comtet {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad word, index out of range, ...).
struct invalid_input : error {
  using error::error;
};

// Input is well-formed but violates a documented precondition
// (e.g. a map applied outside its avoidance class).
struct precondition_violation : error {
  using error::error;
};

// Series/polynomial division that cannot be carried out exactly.
struct division_error : error {
  using error::error;
};

// Pattern set with no implemented closed form.
struct unsupported_pattern : error {
  using error::error;
};

// An exact identity that must hold by construction failed; indicates a bug
// in this library, not bad input.
struct internal_consistency_error : error {
  using error::error;
};

}  // namespace comtet
