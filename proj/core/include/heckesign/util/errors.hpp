#pragma once

#include <stdexcept>
#include <string>

namespace heckesign {

/// Raised when a mathematical invariant that must hold for correct input
/// fails. Such a failure points at a bug in a coefficient engine or solver,
/// not at bad user input. The CLI maps it to exit code 1.
class invariant_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured work budget.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table was asked for data beyond the range it was built for.
class coverage_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace heckesign
