#include "quadphase/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "quadphase/errors.hpp"

namespace quadphase {

namespace {

constexpr int kMaxSeriesTerms = 100000;
constexpr int kMaxAsymptoticTerms = 400;

void kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

void validate_kummer(const KummerParams& p) {
  if (is_nonpositive_integer(p.c))
    throw std::domain_error("kummer: c must not be zero or a negative integer");
  if (!(p.x >= 0.0)) throw std::domain_error("kummer: x >= 0 required");
}

}  // namespace

double lgamma_positive(double x) {
  if (!(x > 0.0)) throw std::domain_error("lgamma_positive: x > 0 required");
  // Lanczos, g = 7, n = 9 (Godfrey coefficients).
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); sin(pi x) > 0 here.
    return std::log(kPi / std::sin(kPi * x)) - lgamma_positive(1.0 - x);
  }
  const double z = x - 1.0;
  double acc = kCoef[0];
  for (std::size_t i = 1; i < kCoef.size(); ++i) acc += kCoef[i] / (z + static_cast<double>(i));
  const double t = z + 7.5;
  return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double pochhammer(double b, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: k >= 0 required");
  double prod = 1.0;
  for (int j = 0; j < k; ++j) prod *= b + static_cast<double>(j);
  return prod;
}

double kummer_series(const KummerParams& p, double rel_tol) {
  validate_kummer(p);
  if (!(rel_tol > 0.0)) throw std::invalid_argument("kummer_series: rel_tol > 0 required");
  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= p.x * (p.b + k) / ((p.c + k) * (k + 1.0));
    kahan_add(sum, comp, term);
    if (std::abs(term) <= rel_tol * std::abs(sum)) return sum;
  }
  throw NumericalError("kummer_series: series did not converge");
}

double kummer_asymptotic_log(const KummerParams& p, int max_correction_terms) {
  validate_kummer(p);
  if (!(p.x > 0.0)) throw std::domain_error("kummer_asymptotic: x > 0 required");
  if (!(p.b > 0.0)) throw std::domain_error("kummer_asymptotic: b > 0 required");
  const int cap = max_correction_terms < 0 ? kMaxAsymptoticTerms : max_correction_terms;
  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  for (int k = 0; k < cap; ++k) {
    const double next = term * (p.c - p.b + k) * (1.0 - p.b + k) / ((k + 1.0) * p.x);
    if (next == 0.0) break;
    if (std::abs(next) >= std::abs(term)) break;  // smallest term reached
    kahan_add(sum, comp, next);
    term = next;
    if (std::abs(next) <= 1e-17 * std::abs(sum)) break;
  }
  if (!(sum > 0.0))
    throw NumericalError("kummer_asymptotic: x too small for the large-x expansion");
  return lgamma_positive(p.c) - lgamma_positive(p.b) + p.x + (p.b - p.c) * std::log(p.x) +
         std::log(sum);
}

double kummer_auto_log(const KummerParams& p, double rel_tol) {
  validate_kummer(p);
  if (p.x < kKummerSwitchX) {
    const double v = kummer_series(p, rel_tol);
    if (!(v > 0.0)) throw NumericalError("kummer_auto: series value not positive");
    return std::log(v);
  }
  return kummer_asymptotic_log(p);
}

double kummer_auto(const KummerParams& p, double rel_tol) {
  return std::exp(kummer_auto_log(p, rel_tol));
}

LogComplex gaussian_cos_integral_lc(double a, double y) {
  if (!(a > 0.0)) throw std::domain_error("gaussian_cos_integral: a > 0 required");
  const double log_mag = 0.5 * std::log(kPi) - std::log(2.0) - 0.5 * std::log(a) - y * y / (4.0 * a);
  return {log_mag, 0.0};
}

LogComplex gaussian_sin_integral_lc(double a, double y) {
  if (!(a > 0.0)) throw std::domain_error("gaussian_sin_integral: a > 0 required");
  if (y == 0.0) return LogComplex::zero();
  const double x = y * y / (4.0 * a);
  const double log_mag =
      std::log(std::abs(y)) - std::log(2.0 * a) - x + kummer_auto_log({0.5, 1.5, x});
  return {log_mag, y > 0.0 ? 0.0 : kPi};
}

double gaussian_cos_integral(double a, double y) {
  return std::exp(gaussian_cos_integral_lc(a, y).log_mag);
}

double gaussian_sin_integral(double a, double y) {
  const LogComplex v = gaussian_sin_integral_lc(a, y);
  if (v.is_zero()) return 0.0;
  const double mag = std::exp(v.log_mag);
  return v.arg == 0.0 ? mag : -mag;
}

}  // namespace quadphase
