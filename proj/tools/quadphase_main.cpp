// Command-line front end: evaluate the integral families at given
// parameters, run verification sweeps with convergence-order fitting, and
// run the built-in check suites.
//
// Exit codes: 0 ok, 1 assertion failure, 2 invalid input, 3 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "quadphase/asymptotics.hpp"
#include "quadphase/checks.hpp"
#include "quadphase/errors.hpp"
#include "quadphase/quadrature.hpp"
#include "quadphase/verify.hpp"

namespace {

using namespace quadphase;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr const char* kCsvHeader =
    "family,c,T,s,value_log_mag,value_arg,asym_log_mag,asym_arg,rel_err";

struct OutputRow {
  std::string family;
  double c;
  double T;
  double s;
  LogComplex value;
  LogComplex asym;
  double rel_err;
};

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string t_text(double T) { return std::isinf(T) ? "inf" : num17(T); }

std::string csv_line(const OutputRow& row) {
  return row.family + "," + num17(row.c) + "," + t_text(row.T) + "," + num17(row.s) + "," +
         num17(row.value.log_mag) + "," + num17(row.value.arg) + "," + num17(row.asym.log_mag) +
         "," + num17(row.asym.arg) + "," + num17(row.rel_err);
}

void print_table(const std::vector<OutputRow>& rows) {
  std::printf("%-6s %-10s %-10s %-12s %-22s %-12s %-12s\n", "family", "c", "T", "s",
              "value (log_mag, arg)", "asym log_mag", "rel_err");
  for (const OutputRow& row : rows)
    std::printf("%-6s %-10g %-10s %-12g (%.10g, %.7g) %-12.7g %-12.6g\n", row.family.c_str(),
                row.c, t_text(row.T).c_str(), row.s, row.value.log_mag, row.value.arg,
                row.asym.log_mag, row.rel_err);
}

SweepFamily parse_family(const std::string& name) {
  if (name == "I") return SweepFamily::I;
  if (name == "I1") return SweepFamily::I1;
  if (name == "J") return SweepFamily::J;
  if (name == "J1") return SweepFamily::J1;
  throw std::invalid_argument("unknown family '" + name + "' (valid: I, I1, J, J1)");
}

double parse_T(const std::string& text) {
  if (text == "inf") return kInf;
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("--T expects a number or the literal 'inf'");
  }
}

void validate_family_params(SweepFamily family, double c, double T, double s) {
  if (!(c > 0.0)) throw std::domain_error("c > 0 required");
  if (!(s > 0.0)) throw std::domain_error("s > 0 required");
  if (!(T > 0.0)) throw std::domain_error("T > 0 required");
  if (std::isinf(T) && (family == SweepFamily::J || family == SweepFamily::J1))
    throw std::domain_error("T must be finite for the J and J1 families");
}

OutputRow evaluate_point(const std::string& family_name, double c, double T, double s,
                         double rel_tol) {
  const SweepFamily family = parse_family(family_name);
  validate_family_params(family, c, T, s);

  OutputRow row{family_name, c, T, s, {}, {}, 0.0};
  switch (family) {
    case SweepFamily::I: {
      row.value = std::isinf(T) ? closed_I_infinite(c, s)
                                : integrate_I({Family::I_FINITE, c, T, s}, rel_tol).value;
      row.asym = asym_I(c, s).value;
      row.rel_err = lc_rel_err(row.value, row.asym);
      break;
    }
    case SweepFamily::I1: {
      row.value = integrate_I1({Family::I1_MOMENT, c, T, s}, rel_tol).value;
      row.asym = asym_I1(c, s).value;
      row.rel_err = lc_rel_err(row.value, row.asym);
      break;
    }
    case SweepFamily::J1: {
      row.value = integrate_J1({Family::J1_REDUCED, c, T, s}, rel_tol).value;
      row.asym = asym_J1(c, T, s).value;
      row.rel_err = lc_rel_err(row.value, row.asym);
      break;
    }
    case SweepFamily::J: {
      const LogComplex j1 = integrate_J1({Family::J1_REDUCED, c, T, s}, rel_tol).value;
      row.value = lc_mul(lc_exp_of({s * T * T, s * c * T}), j1);
      row.asym = asym_J(c, T, s).value;
      row.rel_err = lc_rel_err(j1, asym_J1(c, T, s).value);
      break;
    }
    default:
      throw std::invalid_argument("family not supported by eval");
  }
  return row;
}

// Removes the file on destruction unless commit() was called, so a failed
// sweep never leaves a partial CSV behind.
class FileGuard {
 public:
  explicit FileGuard(std::string path) : path_(std::move(path)) {}
  ~FileGuard() {
    if (!committed_ && !path_.empty()) std::remove(path_.c_str());
  }
  void commit() { committed_ = true; }

 private:
  std::string path_;
  bool committed_ = false;
};

int cmd_eval(const std::string& family, double c, const std::string& t_text_in, double s,
             double rel_tol, const std::string& format) {
  const double T = parse_T(t_text_in);
  const OutputRow row = evaluate_point(family, c, T, s, rel_tol);
  if (format == "csv") {
    std::printf("%s\n%s\n", kCsvHeader, csv_line(row).c_str());
  } else {
    print_table({row});
  }
  return 0;
}

int cmd_sweep(const std::string& family_name, double c, const std::string& t_text_in,
              double s_min, double s_max, long points, double rel_tol, const std::string& out) {
  if (points < 4) throw std::invalid_argument("--points must be at least 4 (order fitting)");
  if (!(s_min > 0.0) || !(s_min < s_max))
    throw std::invalid_argument("need 0 < --s-min < --s-max");
  const double T = parse_T(t_text_in);
  const SweepFamily family = parse_family(family_name);
  validate_family_params(family, c, T, s_min);

  const SweepConfig cfg{family, c, T, geometric_grid(s_min, s_max, static_cast<std::size_t>(points)),
                        rel_tol};
  FileGuard guard(out);
  const ConvergenceReport report = run_sweep(cfg);

  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + out + "'");
  file << kCsvHeader << "\n";
  for (const SweepRow& r : report.rows)
    file << csv_line({family_name, c, T, r.s, r.numeric, r.asymptotic, r.rel_err}) << "\n";
  file << "#fit," << num17(report.fitted_order) << "," << num17(report.fit_r2) << "\n";
  file.close();
  if (!file) throw NumericalError("failed writing '" + out + "'");
  guard.commit();

  std::printf("fitted_order %.17g fit_r2 %.17g rows %zu\n", report.fitted_order, report.fit_r2,
              report.rows.size());
  return 0;
}

int cmd_check(const std::string& suite) {
  const std::vector<CheckResult> results = run_check_suite(suite);
  bool all_ok = true;
  for (const CheckResult& r : results) {
    all_ok = all_ok && r.passed;
    std::printf("%s %s%s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
  }
  std::printf("%s: %zu assertions\n", all_ok ? "OK" : "FAILED", results.size());
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace-type integrals with complex quadratic phase: evaluation, "
               "leading-order asymptotics, and convergence verification"};
  app.require_subcommand(1);

  std::string family, t_str = "1", format = "table", out_path, suite;
  double c = 1.0, s = 1.0, s_min = 0.0, s_max = 0.0, rel_tol = 1e-10;
  long points = 0;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one family at given parameters");
  eval->add_option("--family", family, "I, I1, J or J1")->required();
  eval->add_option("--c", c, "phase constant c > 0")->required();
  eval->add_option("--T", t_str, "upper limit (number or 'inf')")->required();
  eval->add_option("--s", s, "large parameter s > 0")->required();
  eval->add_option("--rel-tol", rel_tol, "oracle relative tolerance");
  eval->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));

  CLI::App* sweep = app.add_subcommand("sweep", "run a geometric s-sweep and fit the decay order");
  sweep->add_option("--family", family, "I, I1, J or J1")->required();
  sweep->add_option("--c", c, "phase constant c > 0")->required();
  sweep->add_option("--T", t_str, "upper limit (number or 'inf')")->required();
  sweep->add_option("--s-min", s_min, "first grid point")->required();
  sweep->add_option("--s-max", s_max, "last grid point")->required();
  sweep->add_option("--points", points, "grid size (>= 4)")->required();
  sweep->add_option("--rel-tol", rel_tol, "oracle relative tolerance");
  sweep->add_option("--out", out_path, "CSV output path")->required();

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite, "theorem1, theorem2, lemma1, remark1, eq9 or all")
      ->required();

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(family, c, t_str, s, rel_tol, format);
    if (sweep->parsed()) return cmd_sweep(family, c, t_str, s_min, s_max, points, rel_tol, out_path);
    if (check->parsed()) return cmd_check(suite);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
