#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace quadphase {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Largest x with exp(x) still finite in double precision.
inline constexpr double kMaxExpArg = 709.0;

/// Reduce an angle to (-pi, pi]. std::remainder performs exact range
/// reduction for the given divisor, so repeated phase additions do not
/// accumulate drift.
inline double normalize_angle(double a) {
  const double r = std::remainder(a, kTwoPi);
  return r <= -kPi ? kPi : r;
}

/// Complex number in log-magnitude/phase form: value = exp(log_mag + i*arg).
///
/// Quantities like exp(s*T^2 + i*s*c*T) stay exactly representable in this
/// form for any s, T that fit in a double, even when the magnitude is far
/// outside double range. Zero is the sentinel log_mag = -infinity; every
/// operation checks for it explicitly so no arithmetic is ever done on the
/// sentinel. The phase is kept normalized to (-pi, pi].
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double arg = 0.0;

  [[nodiscard]] bool is_zero() const { return std::isinf(log_mag) && log_mag < 0.0; }
  [[nodiscard]] static LogComplex zero() { return {}; }
};

inline LogComplex lc_from_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("lc_from_complex: components must be finite");
  if (z.real() == 0.0 && z.imag() == 0.0) return LogComplex::zero();
  return {std::log(std::abs(z)), normalize_angle(std::arg(z))};
}

/// Inverse of lc_from_complex for magnitudes representable as double.
inline Complex lc_to_complex(const LogComplex& v) {
  if (v.is_zero()) return {0.0, 0.0};
  if (v.log_mag > kMaxExpArg)
    throw std::domain_error("lc_to_complex: magnitude exceeds double range");
  const double m = std::exp(v.log_mag);
  return {m * std::cos(v.arg), m * std::sin(v.arg)};
}

inline LogComplex lc_mul(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() || b.is_zero()) return LogComplex::zero();
  return {a.log_mag + b.log_mag, normalize_angle(a.arg + b.arg)};
}

inline LogComplex lc_div(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero()) throw std::domain_error("lc_div: division by zero");
  if (a.is_zero()) return LogComplex::zero();
  return {a.log_mag - b.log_mag, normalize_angle(a.arg - b.arg)};
}

inline LogComplex operator*(const LogComplex& a, const LogComplex& b) { return lc_mul(a, b); }

/// exp(z) represented exactly: log_mag = Re z, arg = Im z (normalized).
inline LogComplex lc_exp_of(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("lc_exp_of: components must be finite");
  return {z.real(), normalize_angle(z.imag())};
}

/// |a/b - 1|, evaluated through the log representation. The quotient has
/// moderate magnitude whenever a and b are comparable, so the result is
/// accurate even when both inputs are astronomically large or small.
inline double lc_rel_err(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero()) throw std::domain_error("lc_rel_err: reference value is zero");
  if (a.is_zero()) return 1.0;
  const double dl = a.log_mag - b.log_mag;
  const double da = normalize_angle(a.arg - b.arg);
  if (dl >= kMaxExpArg) return std::exp(dl);  // quotient dwarfs 1
  // e^{dl} e^{i da} - 1, with the real part written so it stays accurate
  // when dl and da are both tiny.
  const double sh = std::sin(0.5 * da);
  const double re = std::expm1(dl) * std::cos(da) - 2.0 * sh * sh;
  const double im = std::exp(dl) * std::sin(da);
  return std::hypot(re, im);
}

/// Assemble re + i*im from two signed-real log-scale parts (arg 0 or pi),
/// without leaving log scale. Used to combine closed-form components whose
/// magnitudes differ by thousands of orders.
inline LogComplex lc_from_re_im(const LogComplex& re_part, const LogComplex& im_part) {
  const auto signed_unit = [](const LogComplex& v) {
    if (std::abs(std::sin(v.arg)) > 1e-9)
      throw std::domain_error("lc_from_re_im: parts must be signed reals (arg 0 or pi)");
    return std::cos(v.arg) < 0.0 ? -1.0 : 1.0;
  };
  if (re_part.is_zero() && im_part.is_zero()) return LogComplex::zero();
  if (re_part.is_zero()) return {im_part.log_mag, signed_unit(im_part) > 0.0 ? 0.5 * kPi : -0.5 * kPi};
  if (im_part.is_zero()) return {re_part.log_mag, signed_unit(re_part) > 0.0 ? 0.0 : kPi};
  const double scale = std::max(re_part.log_mag, im_part.log_mag);
  const Complex z{signed_unit(re_part) * std::exp(re_part.log_mag - scale),
                  signed_unit(im_part) * std::exp(im_part.log_mag - scale)};
  return {scale + std::log(std::abs(z)), normalize_angle(std::arg(z))};
}

}  // namespace quadphase
