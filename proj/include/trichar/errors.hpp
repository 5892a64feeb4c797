#pragma once

#include <stdexcept>
#include <string>

namespace trichar {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed requests: bad schema, mismatched ambients, violated preconditions.
struct usage_error : error {
  using error::error;
};

/// Mathematically invalid operand (division by zero, non-idempotent element, ...).
struct domain_error : error {
  using error::error;
};

/// Input data fails a structural hypothesis (associativity, nilpotency, p | |H|, ...).
struct validation_error : error {
  using error::error;
};

/// A theorem-backed internal invariant failed; always a bug, never a data problem.
struct consistency_error : error {
  using error::error;
};

/// Request exceeds the supported problem size.
struct capability_error : error {
  using error::error;
};

}  // namespace trichar
