#pragma once

#include <stdexcept>
#include <string>

namespace tiltcat {

// Invalid input values are reported with std::invalid_argument.

/// A documented precondition of an engine operation does not hold
/// (e.g. a map passed to diagonalize_mono is not injective).
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Structure constants or idempotent data that do not define the requested
/// kind of algebra.
class construction_rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation contradicted a proven identity. Signals a bug.
class internal_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tiltcat
