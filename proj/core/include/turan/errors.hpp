#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Malformed or precondition-violating input (maps to CLI exit code 1).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A size/work guard refused the computation (maps to CLI exit code 2).
/// Guards refuse explicitly instead of silently degrading to heuristics.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace turan
