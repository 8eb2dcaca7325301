#pragma once

#include <cstddef>
#include <vector>

#include "quadphase/logcomplex.hpp"
#include "quadphase/quadrature.hpp"

namespace quadphase {

/// Families a convergence sweep can target. I with T = inf uses the closed
/// form as numeric reference; everything else uses the quadrature oracle.
/// J is evaluated through the exact reduction J = e^{sT^2 + iscT} J1, and its
/// relative error is computed with the exponential prefactor cancelled, so a
/// J sweep is meaningful at any s.
enum class SweepFamily { I, I1, J, J1, J_DIRECT };

struct SweepConfig {
  SweepFamily family;
  double c = 1.0;
  double T = 1.0;  // +inf selects the infinite-limit I family
  std::vector<double> s_grid;
  double rel_tol = 1e-10;
};

struct SweepRow {
  double s;
  LogComplex numeric;
  LogComplex asymptotic;
  double rel_err;
};

struct ConvergenceReport {
  std::vector<SweepRow> rows;
  double fitted_order = 0.0;  // negated slope of log(rel_err) vs log(s)
  double fit_r2 = 0.0;
  std::size_t fit_points_used = 0;
  /// First index from which rel_err is non-increasing to the end of the
  /// grid (the entry point of the asymptotic regime on this grid).
  std::size_t regime_entry_index = 0;
};

struct LogLogFit {
  double slope = 0.0;
  double r2 = 0.0;
  std::size_t points_used = 0;
};

/// Ordinary least squares on (ln x, ln y). Requires at least two positive,
/// finite points; others are ignored.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Geometric grid with the given endpoints, inclusive.
std::vector<double> geometric_grid(double s_min, double s_max, std::size_t points);

/// Runs the numeric-vs-asymptotic sweep for the configured family and fits
/// the decay order of the relative error. Rows whose rel_err sits within a
/// factor 100 of the oracle tolerance are excluded from the fit (error-floor
/// contamination). Oracle failures are rethrown annotated with the offending s.
ConvergenceReport run_sweep(const SweepConfig& cfg);

struct TailBound {
  double lhs;    // |integral_eps^T e^{-s x^2} e^{icsx} dx|, from the oracle
  double bound;  // (T - eps) e^{-s eps^2}, explicit constant for the O(.)
};

/// Tail estimate behind the T-independence of I: the lhs must not exceed the
/// bound, and lhs*s -> 0 along s sweeps.
TailBound tail_test(double c, double s, double eps, double T, double rel_tol = 1e-10);

/// The epsilon-splitting of J1 with eps = s^{-(0.5+delta)}:
///   J1 = J2 + remainder,   J2 = integral_0^eps of the reduced integrand,
///   J3 = integral_0^eps e^{-s y (2T+ic)} dy  (analytic),
/// remainder = integral_eps^T of the reduced integrand, evaluated directly so
/// it resolves magnitudes like e^{-s eps (2T-eps)} that a floating-point
/// subtraction of J1 - J2 could never see.
struct EpsilonSplit {
  double s;
  double delta;
  double epsilon;
  LogComplex J1;
  LogComplex J2;
  LogComplex J3;
  LogComplex remainder;
  double remainder_bound;  // (T - eps) e^{-s eps (2T - eps)}
};

EpsilonSplit epsilon_split(double c, double T, double s, double delta = 0.1,
                           double rel_tol = 1e-12);

}  // namespace quadphase
