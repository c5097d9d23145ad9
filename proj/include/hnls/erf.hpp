#pragma once

namespace hnls {

/// Error function, evaluated in-repo so results are bit-stable across
/// platforms and libm versions. Rational minimax approximation after
/// W. J. Cody (netlib specfun CALERF); absolute error below 1e-16.
double erf(double x);

/// Complementary error function from the same approximation.
double erfc(double x);

}  // namespace hnls
