#pragma once

#include <string>
#include <vector>

namespace quadphase {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Assertion suites for the proved asymptotic statements. Each returns one
/// CheckResult per assertion; every tolerance is fixed here, in code.
std::vector<CheckResult> check_theorem1();  // I(s) ~ i/(sc), ratio bound + decay order
std::vector<CheckResult> check_remark1();   // T-independence of I, tail bounds
std::vector<CheckResult> check_eq9();       // I1(s) ~ -2i s^-3 c^-3 + differentiation identity
std::vector<CheckResult> check_lemma1();    // J1(s) ~ 1/(s(2T+ic)) + epsilon-splitting
std::vector<CheckResult> check_theorem2();  // J reduction identity + prefactor cancellation

const std::vector<std::string>& check_suite_names();  // includes "all"

/// Runs one suite (or "all"). Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_check_suite(const std::string& suite);

}  // namespace quadphase
