#pragma once

#include "quadphase/errors.hpp"
#include "quadphase/logcomplex.hpp"

namespace quadphase {

/// Integral families handled by the oracle.
///   I_FINITE   : integral_0^T   e^{-s x^2} e^{i c s x} dx
///   I_INFINITE : integral_0^inf e^{-s x^2} e^{i c s x} dx
///   J_DIRECT   : integral_0^T   e^{s x^2} e^{i c s x} dx   (guarded)
///   J1_REDUCED : integral_0^T   e^{-s y (2T + ic - y)} dy  (magnitude <= 1)
///   I1_MOMENT  : integral_0^T   e^{-s x^2} e^{i c s x} x^2 dx
enum class Family { I_FINITE, I_INFINITE, J_DIRECT, J1_REDUCED, I1_MOMENT };

struct IntegralSpec {
  Family family;
  double c;
  double T;  // +infinity allowed for I_INFINITE and I1_MOMENT
  double s;
};

/// Throws std::domain_error naming the violated invariant.
void validate(const IntegralSpec& spec);

struct QuadratureResult {
  LogComplex value;
  double abs_err_estimate = 0.0;
  long evaluations = 0;
};

/// Direct-J guard: integrand magnitude e^{s T^2} must stay inside double
/// range with headroom for the quadrature sums.
inline constexpr double kOverflowGuard = 600.0;

/// Truncation exponent for infinite upper limits: x_max = sqrt(W/s) with
/// W = 50 leaves a tail below e^{-50}, under every tolerance used here.
inline constexpr double kTailCutoffExponent = 50.0;

inline constexpr long kEvaluationBudget = 10'000'000;

QuadratureResult integrate_I(const IntegralSpec& spec, double rel_tol);
QuadratureResult integrate_I1(const IntegralSpec& spec, double rel_tol);
QuadratureResult integrate_J1(const IntegralSpec& spec, double rel_tol);
QuadratureResult integrate_J_direct(const IntegralSpec& spec, double rel_tol);

/// Segment forms of the bounded integrands, used for tail estimates and the
/// epsilon-splitting diagnostics.
QuadratureResult integrate_I_segment(double c, double s, double x0, double x1, double rel_tol);
QuadratureResult integrate_J1_segment(double c, double T, double s, double y0, double y1,
                                      double rel_tol);

/// Integrand values, exposed for property tests and benchmarks.
Complex i_integrand(double c, double s, double x);
Complex i1_integrand(double c, double s, double x);
Complex j1_integrand(double c, double T, double s, double y);
Complex j_direct_integrand(double c, double s, double x);

}  // namespace quadphase
