#include "quadphase/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quadphase/special_functions.hpp"

namespace quadphase {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::domain_error(std::string("asymptotics: ") + name + " > 0 required");
}

}  // namespace

AsymptoticValue asym_I(double c, double s) {
  require_positive(c, "c");
  require_positive(s, "s");
  return {{-std::log(s * c), 0.5 * kPi}, 1.0};
}

LogComplex closed_I_infinite(double c, double s) {
  require_positive(c, "c");
  require_positive(s, "s");
  return lc_from_re_im(gaussian_cos_integral_lc(s, c * s), gaussian_sin_integral_lc(s, c * s));
}

AsymptoticValue asym_I1(double c, double s) {
  require_positive(c, "c");
  require_positive(s, "s");
  return {{std::log(2.0) - 3.0 * std::log(s) - 3.0 * std::log(c), -0.5 * kPi}, 1.0};
}

AsymptoticValue asym_J1(double c, double T, double s) {
  require_positive(c, "c");
  require_positive(T, "T");
  require_positive(s, "s");
  return {lc_from_complex(1.0 / (s * Complex{2.0 * T, c})), 1.0};
}

AsymptoticValue asym_J(double c, double T, double s) {
  require_positive(c, "c");
  require_positive(T, "T");
  require_positive(s, "s");
  const LogComplex prefactor = lc_exp_of({s * T * T, s * c * T});
  return {lc_mul(prefactor, asym_J1(c, T, s).value), 1.0};
}

}  // namespace quadphase
