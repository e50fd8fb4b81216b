#pragma once

#include <stdexcept>
#include <string>

namespace lagcoh {

// Raised when a configured resource cap (pair budget, slice size, timeout)
// is exceeded.  Callers distinguish this from verification failures.
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input (parse errors, mismatched rings, bad CLI arguments).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lagcoh
