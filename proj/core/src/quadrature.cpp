#include "quadphase/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace quadphase {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Odd indices are the Gauss-7 nodes.
constexpr std::array<double, 15> kNodes = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr std::array<double, 15> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr std::array<double, 7> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

constexpr double kTinyAbs = 1e-300;
constexpr long kMaxInitialPanels = 200000;

struct Panel {
  double a, b;
  double value;
  double err;
  double resabs;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double k15 = 0.0, g7 = 0.0, resabs = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(mid + half * kNodes[i]);
    k15 += kKronrodWeights[i] * fx;
    resabs += kKronrodWeights[i] * std::abs(fx);
    if (i % 2 == 1) g7 += kGaussWeights[i / 2] * fx;
  }
  return {a, b, k15 * half, std::abs(k15 - g7) * half, resabs * half};
}

struct ComponentResult {
  double value = 0.0;
  double err = 0.0;
  long evaluations = 0;
};

/// Worst-interval-first adaptive refinement of the embedded G7/K15 pair.
/// Runs until the error estimate meets max(rel_tol*|value|, round-off floor),
/// the budget is exhausted, or refinement stops making progress. The round-off
/// floor 50*eps*resabs is what cancellation-dominated components (e.g. the
/// real part of I at large s) can actually attain; the caller judges the
/// combined real/imaginary estimate against the contract. Never throws on
/// tolerance failure.
ComponentResult integrate_component(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, long initial_panels, long budget) {
  std::vector<Panel> panels;
  std::vector<bool> dead;
  // Max-heap on (err, index); unique indices make the order deterministic.
  std::priority_queue<std::pair<double, std::size_t>> queue;

  double total_value = 0.0;
  double total_err = 0.0;
  double total_resabs = 0.0;
  long evals = 0;

  const auto push_panel = [&](double pa, double pb) {
    Panel p = evaluate_panel(f, pa, pb);
    evals += 15;
    if (!std::isfinite(p.value) || !std::isfinite(p.err))
      throw NumericalError("quadrature: integrand produced a non-finite value");
    total_value += p.value;
    total_err += p.err;
    total_resabs += p.resabs;
    panels.push_back(p);
    dead.push_back(false);
    queue.emplace(p.err, panels.size() - 1);
  };

  const long n0 = std::max<long>(1, std::min(kMaxInitialPanels, initial_panels));
  for (long i = 0; i < n0; ++i) {
    const double t0 = static_cast<double>(i) / static_cast<double>(n0);
    const double t1 = static_cast<double>(i + 1) / static_cast<double>(n0);
    push_panel(a + (b - a) * t0, a + (b - a) * t1);
  }

  constexpr double kRoundoffFactor = 50.0 * std::numeric_limits<double>::epsilon();
  double best_err = total_err;
  int stalled = 0;
  while (true) {
    const double target = std::max({rel_tol * std::abs(total_value), kTinyAbs,
                                    kRoundoffFactor * total_resabs});
    if (total_err <= target) break;
    if (evals + 30 > budget) break;
    if (queue.empty()) break;
    const auto [err, idx] = queue.top();
    queue.pop();
    if (dead[idx]) continue;
    const Panel worst = panels[idx];
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) continue;  // width at rounding floor
    dead[idx] = true;
    total_value -= worst.value;
    total_err -= worst.err;
    total_resabs -= worst.resabs;
    push_panel(worst.a, mid);
    push_panel(mid, worst.b);
    if (total_err < 0.999 * best_err) {
      best_err = total_err;
      stalled = 0;
    } else if (++stalled >= 64) {
      break;  // no further progress
    }
  }
  return {total_value, std::max(total_err, 0.0), evals};
}

using RealFn = std::function<double(double)>;

void validate_rel_tol(double rel_tol) {
  if (!(rel_tol > 1e-14 && rel_tol < 1e-2))
    throw std::invalid_argument("quadrature: rel_tol must lie in (1e-14, 1e-2)");
}

/// Initial partition sized so one panel sees at most ~2 oscillation periods
/// of e^{i c s x}.
long oscillation_panels(double length, double c, double s) {
  const double panel_len = 4.0 * kPi / (s * c);
  const double n = std::ceil(length / panel_len);
  if (!(n > 0.0)) return 1;
  return n > static_cast<double>(kMaxInitialPanels) ? kMaxInitialPanels : static_cast<long>(n);
}

QuadratureResult integrate_complex(const RealFn& re, const RealFn& im, double a, double b,
                                   double rel_tol, long initial_panels) {
  validate_rel_tol(rel_tol);
  if (!(b >= a)) throw std::invalid_argument("quadrature: empty or reversed interval");

  const ComponentResult re_part =
      integrate_component(re, a, b, rel_tol, initial_panels, kEvaluationBudget / 2);
  const ComponentResult im_part =
      integrate_component(im, a, b, rel_tol, initial_panels, kEvaluationBudget / 2);

  const Complex value{re_part.value, im_part.value};
  const double err = std::hypot(re_part.err, im_part.err);
  const long evals = re_part.evaluations + im_part.evaluations;
  const double magnitude = std::abs(value);
  const double target = std::max(rel_tol * magnitude, kTinyAbs);
  if (err > target) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "quadrature: tolerance not met within the evaluation budget "
                  "(err=%.3g, target=%.3g, evaluations=%ld)",
                  err, target, evals);
    throw NumericalError(msg);
  }
  return {lc_from_complex(value), err, evals};
}

void require_family(const IntegralSpec& spec, Family expected, const char* op) {
  if (spec.family != expected)
    throw std::invalid_argument(std::string(op) + ": wrong family for this operation");
}

}  // namespace

void validate(const IntegralSpec& spec) {
  if (!(spec.c > 0.0)) throw std::domain_error("IntegralSpec: c > 0 required");
  if (!(spec.s > 0.0)) throw std::domain_error("IntegralSpec: s > 0 required");
  const bool t_infinite = std::isinf(spec.T);
  if (spec.family == Family::I_INFINITE) {
    if (!t_infinite) throw std::domain_error("IntegralSpec: I_INFINITE requires T = inf");
    return;
  }
  if (t_infinite && spec.family != Family::I1_MOMENT)
    throw std::domain_error("IntegralSpec: T must be finite for this family");
  if (!t_infinite && !(spec.T > 0.0)) throw std::domain_error("IntegralSpec: T > 0 required");
  if (spec.family == Family::J_DIRECT && spec.s * spec.T * spec.T > kOverflowGuard)
    throw OverflowGuardError("integrate_J_direct: s*T^2 exceeds the overflow guard (" +
                             std::to_string(kOverflowGuard) + "); use the reduced route");
}

Complex i_integrand(double c, double s, double x) {
  const double env = std::exp(-s * x * x);
  return {env * std::cos(c * s * x), env * std::sin(c * s * x)};
}

Complex i1_integrand(double c, double s, double x) { return i_integrand(c, s, x) * (x * x); }

Complex j1_integrand(double c, double T, double s, double y) {
  // e^{-s y (2T + ic - y)} = e^{-s y (2T - y)} e^{-i c s y}; the envelope is
  // <= 1 on [0, T] because y (2T - y) is increasing there.
  const double env = std::exp(-s * y * (2.0 * T - y));
  return {env * std::cos(c * s * y), -env * std::sin(c * s * y)};
}

Complex j_direct_integrand(double c, double s, double x) {
  const double env = std::exp(s * x * x);
  return {env * std::cos(c * s * x), env * std::sin(c * s * x)};
}

QuadratureResult integrate_I_segment(double c, double s, double x0, double x1, double rel_tol) {
  if (!(c > 0.0 && s > 0.0)) throw std::domain_error("integrate_I_segment: c > 0, s > 0 required");
  if (!(x0 >= 0.0 && x1 >= x0)) throw std::invalid_argument("integrate_I_segment: bad interval");
  const long n0 = oscillation_panels(x1 - x0, c, s);
  return integrate_complex([=](double x) { return i_integrand(c, s, x).real(); },
                           [=](double x) { return i_integrand(c, s, x).imag(); }, x0, x1, rel_tol,
                           n0);
}

QuadratureResult integrate_J1_segment(double c, double T, double s, double y0, double y1,
                                      double rel_tol) {
  if (!(c > 0.0 && s > 0.0 && T > 0.0))
    throw std::domain_error("integrate_J1_segment: c, T, s > 0 required");
  if (!(y0 >= 0.0 && y1 >= y0 && y1 <= T))
    throw std::invalid_argument("integrate_J1_segment: interval must lie in [0, T]");
  const long n0 = oscillation_panels(y1 - y0, c, s);
  return integrate_complex([=](double y) { return j1_integrand(c, T, s, y).real(); },
                           [=](double y) { return j1_integrand(c, T, s, y).imag(); }, y0, y1,
                           rel_tol, n0);
}

QuadratureResult integrate_I(const IntegralSpec& spec, double rel_tol) {
  if (spec.family != Family::I_FINITE && spec.family != Family::I_INFINITE)
    throw std::invalid_argument("integrate_I: family must be I_FINITE or I_INFINITE");
  validate(spec);
  const double upper = spec.family == Family::I_INFINITE
                           ? std::sqrt(kTailCutoffExponent / spec.s)
                           : spec.T;
  return integrate_I_segment(spec.c, spec.s, 0.0, upper, rel_tol);
}

QuadratureResult integrate_I1(const IntegralSpec& spec, double rel_tol) {
  require_family(spec, Family::I1_MOMENT, "integrate_I1");
  validate(spec);
  validate_rel_tol(rel_tol);
  const double upper =
      std::isinf(spec.T) ? std::sqrt(kTailCutoffExponent / spec.s) : spec.T;
  const double c = spec.c, s = spec.s;
  const long n0 = oscillation_panels(upper, c, s);
  return integrate_complex([=](double x) { return i1_integrand(c, s, x).real(); },
                           [=](double x) { return i1_integrand(c, s, x).imag(); }, 0.0, upper,
                           rel_tol, n0);
}

QuadratureResult integrate_J1(const IntegralSpec& spec, double rel_tol) {
  require_family(spec, Family::J1_REDUCED, "integrate_J1");
  validate(spec);
  return integrate_J1_segment(spec.c, spec.T, spec.s, 0.0, spec.T, rel_tol);
}

QuadratureResult integrate_J_direct(const IntegralSpec& spec, double rel_tol) {
  require_family(spec, Family::J_DIRECT, "integrate_J_direct");
  validate(spec);
  validate_rel_tol(rel_tol);
  const double c = spec.c, s = spec.s;
  const long n0 = oscillation_panels(spec.T, c, s);
  return integrate_complex([=](double x) { return j_direct_integrand(c, s, x).real(); },
                           [=](double x) { return j_direct_integrand(c, s, x).imag(); }, 0.0,
                           spec.T, rel_tol, n0);
}

}  // namespace quadphase
