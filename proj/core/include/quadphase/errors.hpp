#pragma once

#include <stdexcept>
#include <string>

namespace quadphase {

/// Thrown when an adaptive integration cannot reach the requested tolerance
/// within its evaluation budget, or when a series fails to converge.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the direct evaluation of exponentially growing integrands when
/// the integrand magnitude would leave double range. Callers must switch to
/// the reduced (log-scaled) route instead.
class OverflowGuardError : public std::domain_error {
 public:
  explicit OverflowGuardError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an asymptotic splitting is requested outside its regime
/// (the cut point epsilon(s) does not fall inside the interval).
class OutOfRegimeError : public std::domain_error {
 public:
  explicit OutOfRegimeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace quadphase
