#pragma once

#include "quadphase/logcomplex.hpp"

namespace quadphase {

/// Parameters of the confluent hypergeometric function F(b; c; x).
/// c must not be zero or a negative integer (the series denominators
/// (c)_k would vanish).
struct KummerParams {
  double b;
  double c;
  double x;
};

/// Argument at which evaluation switches from the power series to the
/// large-x expansion for the parameter ranges used here. Both branches are
/// accurate near the boundary; agreement across it is tested, not assumed.
inline constexpr double kKummerSwitchX = 40.0;

/// Request optimal truncation of the large-x correction series (stop at the
/// smallest term).
inline constexpr int kOptimalTruncation = -1;

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
double lgamma_positive(double x);

/// Rising factorial (b)_k = b (b+1) ... (b+k-1), with (b)_0 = 1.
double pochhammer(double b, int k);

/// F(b; c; x) by direct summation of sum_k (b)_k/(c)_k x^k/k!, terminated
/// when the next term drops below rel_tol times the running sum. Converges
/// for every x >= 0; usable while e^x is representable.
double kummer_series(const KummerParams& p, double rel_tol);

/// ln F(b; c; x) for large x > 0 from the expansion
///   F(b; c; x) ~ Gamma(c)/Gamma(b) e^x x^{b-c} S(x),
///   S(x) = sum_k (c-b)_k (1-b)_k / (k! x^k),
/// truncated at its smallest term, or after max_correction_terms terms if a
/// nonnegative cap is given (0 keeps just the leading term).
double kummer_asymptotic_log(const KummerParams& p, int max_correction_terms = kOptimalTruncation);

/// ln F(b; c; x) for any x >= 0: series below kKummerSwitchX, large-x
/// expansion above it.
double kummer_auto_log(const KummerParams& p, double rel_tol = 1e-14);

/// exp(kummer_auto_log); only valid while the value fits in a double.
double kummer_auto(const KummerParams& p, double rel_tol = 1e-14);

/// integral_0^inf e^{-a x^2} cos(x y) dx = sqrt(pi)/(2 sqrt(a)) e^{-y^2/(4a)},
/// assembled in log scale so deeply negative exponents do not flush to zero.
LogComplex gaussian_cos_integral_lc(double a, double y);

/// integral_0^inf e^{-a x^2} sin(x y) dx
///   = y e^{-y^2/(4a)}/(2a) * F(1/2; 3/2; y^2/(4a)).
/// The decaying exponential and the exponentially growing F factor are
/// combined in log scale, so the result never spuriously over/underflows.
LogComplex gaussian_sin_integral_lc(double a, double y);

/// Double-valued conveniences; may underflow to 0 when the exponent is very
/// negative. Use the _lc forms when the log-scale value is needed.
double gaussian_cos_integral(double a, double y);
double gaussian_sin_integral(double a, double y);

}  // namespace quadphase
