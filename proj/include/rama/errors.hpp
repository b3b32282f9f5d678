#pragma once

#include <stdexcept>
#include <string>

namespace rama {

// A residue precondition of the construction is not met (the message names
// the failing condition, e.g. "-1 is not a quadratic residue mod 21").
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or allocation would exceed the desk-scale budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative eigenvalue refinement did not converge; carries the last bracket.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi,
                   double residual_lo, double residual_hi)
      : std::runtime_error(what),
        last_lo(lo), last_hi(hi),
        residual_lo(residual_lo), residual_hi(residual_hi) {}
  double last_lo, last_hi;
  double residual_lo, residual_hi;
};

}  // namespace rama
