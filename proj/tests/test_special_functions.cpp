#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "quadphase/errors.hpp"
#include "quadphase/special_functions.hpp"
#include "quadphase/verify.hpp"
#include "support/erfi.hpp"
#include "support/simpson.hpp"

using namespace quadphase;
using quadphase::testing::adaptive_simpson;
using quadphase::testing::erfi_log;

namespace {

// Same series as the library, summed independently in extended precision.
long double kummer_series_oracle(long double b, long double c, long double x, int terms) {
  long double sum = 1.0L, term = 1.0L;
  for (int k = 0; k < terms; ++k) {
    term *= x * (b + k) / ((c + k) * (k + 1));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("lgamma_positive at half-integers and known values") {
  CHECK(std::exp(lgamma_positive(0.5)) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(std::exp(lgamma_positive(1.0)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::exp(lgamma_positive(3.5)) == doctest::Approx(3.3233509704478426).epsilon(1e-13));
  // ln(100!) — classic reference value.
  CHECK(lgamma_positive(101.0) == doctest::Approx(363.73937555556349).epsilon(1e-13));
  // Gamma(3/2)/Gamma(1/2) = 1/2, the constant in front of the large-x form.
  CHECK(std::exp(lgamma_positive(1.5) - lgamma_positive(0.5)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(lgamma_positive(0.0), std::domain_error);
  CHECK_THROWS_AS(lgamma_positive(-1.5), std::domain_error);
}

TEST_CASE("pochhammer reference values") {
  CHECK(pochhammer(2.7, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));
  // Product form hits an exact zero when b is a non-positive integer in range.
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(-2.0, 5) == 0.0);
  CHECK_THROWS_AS(pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("pochhammer recurrence (b)_{k+1} = (b)_k (b+k)") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> b_dist(-5.0, 5.0);
  std::uniform_int_distribution<int> k_dist(0, 25);
  for (int trial = 0; trial < 500; ++trial) {
    const double b = b_dist(rng);
    const int k = k_dist(rng);
    const double lhs = pochhammer(b, k + 1);
    const double rhs = pochhammer(b, k) * (b + k);
    if (rhs == 0.0)
      CHECK(lhs == 0.0);
    else
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("kummer_series basics") {
  CHECK(kummer_series({0.7, 2.3, 0.0}, 1e-14) == 1.0);
  CHECK(kummer_series({1.0, 1.0, 1.0}, 1e-14) ==
        doctest::Approx(2.718281828459045).epsilon(1e-12));
  CHECK_THROWS_AS(kummer_series({1.0, 0.0, 1.0}, 1e-12), std::domain_error);
  CHECK_THROWS_AS(kummer_series({1.0, -3.0, 1.0}, 1e-12), std::domain_error);
  CHECK_NOTHROW(kummer_series({1.0, -0.5, 1.0}, 1e-12));
  CHECK_THROWS_AS(kummer_series({1.0, 1.0, -1.0}, 1e-12), std::domain_error);
  CHECK_THROWS_AS(kummer_series({1.0, 1.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("F(1;1;x) = e^x to 1e-12 on [0, 30]") {
  for (double x = 0.0; x <= 30.0; x += 1.5)
    CHECK(kummer_series({1.0, 1.0, x}, 1e-15) == doctest::Approx(std::exp(x)).epsilon(1e-12));
}

TEST_CASE("F(1/2;3/2;1) against extended-precision summation and erfi") {
  const double value = kummer_series({0.5, 1.5, 1.0}, 1e-15);
  const double oracle = static_cast<double>(kummer_series_oracle(0.5L, 1.5L, 1.0L, 60));
  CHECK(value == doctest::Approx(oracle).epsilon(1e-13));
  CHECK(value == doctest::Approx(1.4626517459071816).epsilon(1e-12));
  CHECK(oracle == doctest::Approx(1.4626517459071816).epsilon(1e-14));
  // F(1/2;3/2;x) = sqrt(pi)/(2 sqrt(x)) erfi(sqrt(x)).
  const double via_erfi = 0.5 * std::sqrt(kPi) * std::exp(erfi_log(1.0));
  CHECK(value == doctest::Approx(via_erfi).epsilon(1e-12));
}

TEST_CASE("large-x expansion against the series") {
  // Optimally truncated form: far inside both bounds stated for it.
  const double at50 = std::exp(kummer_asymptotic_log({0.5, 1.5, 50.0}));
  CHECK(std::abs(at50 / kummer_series({0.5, 1.5, 50.0}, 1e-15) - 1.0) <= 0.02);
  const double at200 = std::exp(kummer_asymptotic_log({0.5, 1.5, 200.0}));
  CHECK(std::abs(at200 / kummer_series({0.5, 1.5, 200.0}, 1e-15) - 1.0) <= 0.005);
  // Leading factor for (1/2, 3/2): (1/2) e^x / x.
  CHECK(kummer_asymptotic_log({0.5, 1.5, 50.0}, 0) ==
        doctest::Approx(std::log(0.5) + 50.0 - std::log(50.0)).epsilon(1e-13));
  // F(1;1;x) = e^x: the correction series collapses and the result is exact.
  CHECK(kummer_asymptotic_log({1.0, 1.0, 100.0}) == doctest::Approx(100.0).epsilon(1e-13));
  CHECK_THROWS_AS(kummer_asymptotic_log({0.5, 1.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(kummer_asymptotic_log({0.5, 1.5, -3.0}), std::domain_error);
}

TEST_CASE("leading-term error decays like 1/x on [30, 300]") {
  std::vector<double> xs, devs;
  for (int i = 0; i < 10; ++i) {
    const double x = 30.0 * std::pow(10.0, i / 9.0);
    const double leading = kummer_asymptotic_log({0.5, 1.5, x}, 0);
    const double series = std::log(kummer_series({0.5, 1.5, x}, 1e-15));
    xs.push_back(x);
    devs.push_back(std::abs(std::expm1(leading - series)));
  }
  const LogLogFit fit = fit_loglog(xs, devs);
  CHECK(std::abs(fit.slope + 1.0) <= 0.15);
}

TEST_CASE("kummer_auto: branch agreement and boundary continuity") {
  CHECK(kummer_auto_log({0.5, 1.5, 0.0}) == 0.0);
  for (double x : {kKummerSwitchX - 0.01, kKummerSwitchX, kKummerSwitchX + 0.01}) {
    const double series_log = std::log(kummer_series({0.5, 1.5, x}, 1e-15));
    const double asym_log = kummer_asymptotic_log({0.5, 1.5, x});
    CHECK(std::abs(std::expm1(series_log - asym_log)) <= 1e-10);
  }
  // Far beyond double range: agree with the independent erfi oracle.
  const double log_f = kummer_auto_log({0.5, 1.5, 1000.0});
  const double log_identity = std::log(0.5 * std::sqrt(kPi)) - 0.5 * std::log(1000.0) +
                              erfi_log(std::sqrt(1000.0));
  CHECK(std::abs(std::expm1(log_f - log_identity)) <= 1e-12);
}

TEST_CASE("erfi identity across 50 log-spaced arguments in [0.01, 500]") {
  for (int i = 0; i < 50; ++i) {
    const double x = 0.01 * std::pow(500.0 / 0.01, i / 49.0);
    const double lhs = kummer_auto_log({0.5, 1.5, x}) +
                       std::log(2.0 * std::sqrt(x) / std::sqrt(kPi));
    CHECK(std::abs(std::expm1(lhs - erfi_log(std::sqrt(x)))) <= 1e-10);
  }
}

TEST_CASE("gaussian_cos_integral reference values") {
  CHECK(gaussian_cos_integral(1.0, 0.0) == doctest::Approx(0.8862269254527580).epsilon(1e-14));
  CHECK(gaussian_cos_integral(1.0, 2.0) ==
        doctest::Approx(0.5 * std::sqrt(kPi) * std::exp(-1.0)).epsilon(1e-14));
  const double numeric = adaptive_simpson(
      [](double x) { return std::exp(-2.0 * x * x) * std::cos(3.0 * x); }, 0.0, 5.0, 1e-12);
  CHECK(std::abs(gaussian_cos_integral(2.0, 3.0) - numeric) <= 1e-10);
  CHECK_THROWS_AS(gaussian_cos_integral(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(gaussian_cos_integral(-2.0, 1.0), std::domain_error);
}

TEST_CASE("gaussian_sin_integral reference values") {
  CHECK(gaussian_sin_integral(1.0, 0.0) == 0.0);
  CHECK(gaussian_sin_integral_lc(1.0, 0.0).is_zero());
  const double numeric = adaptive_simpson(
      [](double x) { return std::exp(-x * x) * std::sin(x); }, 0.0, 8.0, 1e-12);
  CHECK(std::abs(gaussian_sin_integral(1.0, 1.0) - numeric) <= 1e-10);
  CHECK(gaussian_sin_integral(1.0, 1.0) == doctest::Approx(0.4244363835020223).epsilon(1e-11));
  CHECK(gaussian_sin_integral(1.0, -1.0) == doctest::Approx(-0.4244363835020223).epsilon(1e-11));
  CHECK_THROWS_AS(gaussian_sin_integral(0.0, 1.0), std::domain_error);
}

TEST_CASE("gaussian_sin_integral at a = s, y = cs approaches 1/(cs)") {
  const double s = 400.0, c = 1.0;
  const double value = gaussian_sin_integral(s, c * s);
  const double ratio_gap = std::abs(value * c * s - 1.0);
  // Expected deviation 2/(c^2 s) = 0.005 plus higher corrections.
  CHECK(ratio_gap >= 0.004);
  CHECK(ratio_gap <= 0.006);
}

TEST_CASE("closed forms match quadrature on the (a, y) grid to 1e-9") {
  for (double a : {0.5, 1.0, 2.0, 10.0}) {
    const double x_max = std::sqrt(50.0 / a);
    for (double y : {0.0, 0.5, 1.0, 3.0, 10.0}) {
      const double cos_numeric = adaptive_simpson(
          [&](double x) { return std::exp(-a * x * x) * std::cos(x * y); }, 0.0, x_max, 1e-11);
      CHECK(std::abs(gaussian_cos_integral(a, y) - cos_numeric) <= 1e-9);
      const double sin_numeric = adaptive_simpson(
          [&](double x) { return std::exp(-a * x * x) * std::sin(x * y); }, 0.0, x_max, 1e-11);
      CHECK(std::abs(gaussian_sin_integral(a, y) - sin_numeric) <= 1e-9);
    }
  }
}
