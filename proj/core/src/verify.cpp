#include "quadphase/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "quadphase/asymptotics.hpp"
#include "quadphase/errors.hpp"

namespace quadphase {

namespace {

void validate_config(const SweepConfig& cfg) {
  if (cfg.s_grid.size() < 4)
    throw std::invalid_argument("run_sweep: s_grid needs at least 4 points for order fitting");
  double prev = 0.0;
  for (double s : cfg.s_grid) {
    if (!(s > prev)) throw std::invalid_argument("run_sweep: s_grid must be strictly increasing and positive");
    prev = s;
  }
  if (!(cfg.c > 0.0)) throw std::domain_error("run_sweep: c > 0 required");
  if (!(cfg.T > 0.0)) throw std::domain_error("run_sweep: T > 0 required");
  if (std::isinf(cfg.T) && cfg.family != SweepFamily::I && cfg.family != SweepFamily::I1)
    throw std::domain_error("run_sweep: T = inf is only meaningful for the I and I1 families");
}

SweepRow evaluate_row(const SweepConfig& cfg, double s) {
  const double c = cfg.c, T = cfg.T;
  switch (cfg.family) {
    case SweepFamily::I: {
      const LogComplex numeric =
          std::isinf(T) ? closed_I_infinite(c, s)
                        : integrate_I({Family::I_FINITE, c, T, s}, cfg.rel_tol).value;
      const LogComplex asym = asym_I(c, s).value;
      return {s, numeric, asym, lc_rel_err(numeric, asym)};
    }
    case SweepFamily::I1: {
      const LogComplex numeric = integrate_I1({Family::I1_MOMENT, c, T, s}, cfg.rel_tol).value;
      const LogComplex asym = asym_I1(c, s).value;
      return {s, numeric, asym, lc_rel_err(numeric, asym)};
    }
    case SweepFamily::J1: {
      const LogComplex numeric = integrate_J1({Family::J1_REDUCED, c, T, s}, cfg.rel_tol).value;
      const LogComplex asym = asym_J1(c, T, s).value;
      return {s, numeric, asym, lc_rel_err(numeric, asym)};
    }
    case SweepFamily::J: {
      // Exact reduction J = e^{sT^2 + iscT} J1. The prefactor cancels in the
      // ratio, so rel_err is computed from the reduced pair; the displayed
      // values carry the prefactor.
      const LogComplex j1 = integrate_J1({Family::J1_REDUCED, c, T, s}, cfg.rel_tol).value;
      const LogComplex prefactor = lc_exp_of({s * T * T, s * c * T});
      const LogComplex numeric = lc_mul(prefactor, j1);
      const LogComplex asym = asym_J(c, T, s).value;
      return {s, numeric, asym, lc_rel_err(j1, asym_J1(c, T, s).value)};
    }
    case SweepFamily::J_DIRECT: {
      const LogComplex numeric = integrate_J_direct({Family::J_DIRECT, c, T, s}, cfg.rel_tol).value;
      const LogComplex asym = asym_J(c, T, s).value;
      return {s, numeric, asym, lc_rel_err(numeric, asym)};
    }
  }
  throw std::invalid_argument("run_sweep: unknown family");
}

}  // namespace

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
  double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    syy += ly * ly;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw NumericalError("fit_loglog: fewer than 2 usable points");
  const double dn = static_cast<double>(n);
  const double cov = dn * sxy - sx * sy;
  const double varx = dn * sxx - sx * sx;
  const double vary = dn * syy - sy * sy;
  const double slope = cov / varx;
  const double r2 = vary > 0.0 ? (cov * cov) / (varx * vary) : 1.0;
  return {slope, r2, n};
}

std::vector<double> geometric_grid(double s_min, double s_max, std::size_t points) {
  if (!(s_min > 0.0) || !(s_max > s_min))
    throw std::invalid_argument("geometric_grid: need 0 < s_min < s_max");
  if (points < 2) throw std::invalid_argument("geometric_grid: need at least 2 points");
  std::vector<double> grid(points);
  const double ratio = std::log(s_max / s_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = s_min * std::exp(ratio * static_cast<double>(i));
  grid.front() = s_min;
  grid.back() = s_max;
  return grid;
}

ConvergenceReport run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);
  ConvergenceReport report;
  report.rows.reserve(cfg.s_grid.size());
  for (double s : cfg.s_grid) {
    try {
      report.rows.push_back(evaluate_row(cfg, s));
    } catch (const NumericalError& e) {
      throw NumericalError(std::string(e.what()) + " (sweep point s=" + std::to_string(s) + ")");
    }
  }

  // Drop rows contaminated by the oracle's own error floor before fitting.
  const double floor = 100.0 * cfg.rel_tol;
  std::vector<double> xs, ys;
  for (const SweepRow& row : report.rows) {
    if (row.rel_err >= floor && std::isfinite(row.rel_err)) {
      xs.push_back(row.s);
      ys.push_back(row.rel_err);
    }
  }
  if (xs.size() < 2) {
    // Everything sits on the oracle's error floor; no order can be certified.
    report.fitted_order = std::numeric_limits<double>::quiet_NaN();
    report.fit_r2 = std::numeric_limits<double>::quiet_NaN();
    report.fit_points_used = xs.size();
  } else {
    const LogLogFit fit = fit_loglog(xs, ys);
    report.fitted_order = -fit.slope;
    report.fit_r2 = fit.r2;
    report.fit_points_used = fit.points_used;
  }

  std::size_t entry = report.rows.size() - 1;
  while (entry > 0 && report.rows[entry - 1].rel_err >= report.rows[entry].rel_err) --entry;
  report.regime_entry_index = entry;
  return report;
}

TailBound tail_test(double c, double s, double eps, double T, double rel_tol) {
  if (!(c > 0.0 && s > 0.0)) throw std::domain_error("tail_test: c > 0, s > 0 required");
  if (!(eps > 0.0 && eps < T))
    throw std::domain_error("tail_test: 0 < eps < T required (nonempty tail interval)");
  const QuadratureResult tail = integrate_I_segment(c, s, eps, T, rel_tol);
  const double lhs = tail.value.is_zero() ? 0.0 : std::exp(tail.value.log_mag);
  const double bound = (T - eps) * std::exp(-s * eps * eps);
  return {lhs, bound};
}

EpsilonSplit epsilon_split(double c, double T, double s, double delta, double rel_tol) {
  if (!(c > 0.0 && T > 0.0 && s > 0.0))
    throw std::domain_error("epsilon_split: c, T, s > 0 required");
  if (!(delta > 0.0 && delta < 0.5))
    throw std::domain_error("epsilon_split: delta must lie in (0, 0.5)");
  const double eps = std::pow(s, -(0.5 + delta));
  if (!(eps < T))
    throw OutOfRegimeError("epsilon_split: eps >= T; s too small for this splitting");

  EpsilonSplit result;
  result.s = s;
  result.delta = delta;
  result.epsilon = eps;
  result.J1 = integrate_J1({Family::J1_REDUCED, c, T, s}, rel_tol).value;
  result.J2 = integrate_J1_segment(c, T, s, 0.0, eps, rel_tol).value;
  result.remainder = integrate_J1_segment(c, T, s, eps, T, rel_tol).value;
  // J3 = (1 - e^{-s eps (2T + ic)}) / (s (2T + ic)), small enough to evaluate
  // in ordinary complex arithmetic.
  const Complex w = s * eps * Complex{2.0 * T, c};
  const Complex denom = s * Complex{2.0 * T, c};
  result.J3 = lc_from_complex((1.0 - std::exp(-w)) / denom);
  result.remainder_bound = (T - eps) * std::exp(-s * eps * (2.0 * T - eps));
  return result;
}

}  // namespace quadphase
