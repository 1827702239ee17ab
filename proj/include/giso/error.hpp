#pragma once

#include <stdexcept>
#include <string>

namespace giso {

// Usage errors: bad degrees, malformed input, violated preconditions.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A subgroup index exceeded the bound the caller promised.
struct index_bound_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The group handed to the Johnson identification is not a Johnson action.
struct not_johnson : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A permutation was requested from an empty homomorphism preimage.
struct empty_preimage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The solver exhausted its subproblem budget.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input (CLI file formats, cycle notation).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace giso
