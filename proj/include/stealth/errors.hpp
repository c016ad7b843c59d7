#pragma once

#include <stdexcept>
#include <string>

namespace stealth {

// Base of every library error. `kind()` is the stable identifier used in
// structured (JSON) error reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define STEALTH_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  }

// A point coincides with another within the degeneracy tolerance, or rays
// that should intersect are parallel.
STEALTH_DEFINE_ERROR(DegenerateGeometry);
// Parameters are well-formed but describe an infeasible construction.
STEALTH_DEFINE_ERROR(InfeasibleParameters);
// Parameters are out of their admissible range (m < 2, gamma outside (0, 1]).
STEALTH_DEFINE_ERROR(InvalidParameters);
STEALTH_DEFINE_ERROR(DomainError);
STEALTH_DEFINE_ERROR(NoFeasiblePoint);
// A solver incumbent exceeded the analytic upper bound.
STEALTH_DEFINE_ERROR(BoundViolation);
STEALTH_DEFINE_ERROR(ResourceLimit);

#undef STEALTH_DEFINE_ERROR

}  // namespace stealth
