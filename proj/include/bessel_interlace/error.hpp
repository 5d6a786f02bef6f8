#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bessel {

enum class ErrorCode {
  DomainNu,          // order is negative or not finite
  DomainX,           // argument is not a finite positive number
  OverflowNu,        // order exceeds kNuMax
  BracketNotFound,   // no sign change inside the scan budget
  NoConvergence,     // refinement did not reach the width / residual targets
  NotFoundWithinCap, // breaking search exhausted its rank cap
  OnlyOneOrdering,   // counterexample scan saw a single ordering
  InvalidArgument,   // any other precondition violation
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bessel
