#pragma once

#include "quadphase/logcomplex.hpp"

namespace quadphase {

/// Leading-order asymptotic value together with the predicted decay exponent
/// of its relative error: |numeric/asymptotic - 1| ~ s^{-claimed_rel_order}.
/// All four families here carry the next correction one power of 1/s down.
struct AsymptoticValue {
  LogComplex value;
  double claimed_rel_order = 1.0;
};

/// I(s) = integral_0^T e^{-s(x^2 - icx)} dx ~ i/(sc) as s -> +inf
/// (independent of T).
AsymptoticValue asym_I(double c, double s);

/// Exact value of I at T = inf, assembled from the Gaussian cosine/sine
/// closed forms:
///   I = sqrt(pi)/(2 sqrt(s)) e^{-c^2 s/4}
///       + i * (cs) e^{-c^2 s/4}/(2s) * F(1/2; 3/2; c^2 s/4).
/// Serves as the high-accuracy reference for I; cheaper and more accurate
/// than quadrature at large s.
LogComplex closed_I_infinite(double c, double s);

/// I1(s) = integral_0^T e^{-s x^2} e^{icsx} x^2 dx ~ -2i s^{-3} c^{-3}.
AsymptoticValue asym_I1(double c, double s);

/// J1(s) = integral_0^T e^{-s y (2T + ic - y)} dy ~ 1/(s(2T + ic)).
AsymptoticValue asym_J1(double c, double T, double s);

/// J(s) = integral_0^T e^{s(x^2 + icx)} dx ~ e^{sT^2 + iscT}/(s(2T + ic)).
/// Returned in log scale; never overflows.
AsymptoticValue asym_J(double c, double T, double s);

}  // namespace quadphase
