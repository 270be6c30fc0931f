#pragma once

#include <stdexcept>
#include <string>

namespace qbound {

/// Shapes or sizes that cannot be combined, or exceed the configured cap.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An input violates a documented precondition (non-Hermitian, unnormalized, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric procedure failed (decomposition non-convergence, invariant breach).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbound
