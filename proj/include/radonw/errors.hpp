#pragma once

#include <stdexcept>
#include <string>

namespace radonw {

/// Parameter outside the domain of an operation (non-finite input, bad sign, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument within the configured margin of an excluded pole/zero set.
struct PoleError : std::domain_error {
  double offending;
  explicit PoleError(const std::string& what, double off)
      : std::domain_error(what), offending(off) {}
};

/// Exponent tuple violates one of the admissibility windows.
struct AdmissibilityError : std::invalid_argument {
  double mu_lo, mu_hi;  // open interval of valid mu
  AdmissibilityError(const std::string& what, double lo, double hi)
      : std::invalid_argument(what), mu_lo(lo), mu_hi(hi) {}
};

/// An integral diverges for the declared decay envelopes.
struct IntegrabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive refinement stopped before reaching the requested tolerance.
struct ConvergenceError : std::runtime_error {
  double achieved;
  ConvergenceError(const std::string& what, double est)
      : std::runtime_error(what), achieved(est) {}
};

/// A sample or function evaluation produced a non-finite value.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computed pairing ratio exceeded the proved sharp constant beyond
/// tolerance; indicates an implementation bug, not a mathematical event.
struct SharpnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace radonw
