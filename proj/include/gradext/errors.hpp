#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gradext {

// Every failure mode the library can report deliberately.  Callers that want
// exit-code discipline (the CLI) map these onto {input error, budget error}.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct ModulusMismatch : Error {
  using Error::Error;
};
struct AlgebraMismatch : Error {
  using Error::Error;
};
struct NotAutomorphism : Error {
  using Error::Error;
};
struct NotHomomorphism : Error {
  using Error::Error;
};
struct NotAlgebraMorphism : Error {
  using Error::Error;
};
struct NotIdempotent : Error {
  using Error::Error;
};
struct NotHomogeneous : Error {
  using Error::Error;
};
struct NotAdmissible : Error {
  using Error::Error;
};
struct InfiniteDimensional : Error {
  using Error::Error;
};
struct UnboundedSupport : Error {
  using Error::Error;
};
struct ContextAxiomViolation : Error {
  using Error::Error;
};
struct NotStronglyGraded : Error {
  using Error::Error;
};
struct NotProjectiveOneSided : Error {
  using Error::Error;
};
struct UnknownClaim : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

// Thrown when an exhaustive search would exceed its stated budget.  Carries
// the estimate so reports can show how far over budget the request was.
struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, double estimate, double budget)
      : Error(what), estimate(estimate), budget(budget) {}
  double estimate;
  double budget;
};

}  // namespace gradext
