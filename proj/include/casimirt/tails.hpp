#pragma once

namespace casimirt::tails {

// Closed forms for the integrals that correct truncated lattice rows and
// columns, with series branches where the closed forms cancel.
//
//   i2(Y, a) = integral over x in (Y, inf) of (x^2 + a^2)^-2
//   i3(Y, a) = integral over x in (Y, inf) of (x^2 + a^2)^-3
//   g2(X, Y) = double integral over x > X, y > Y of (x^2 + y^2)^-2
//
// All arguments must satisfy Y > 0 (X, Y > 0 for g2); a may be zero.
double i2(double Y, double a);
double i3(double Y, double a);
double g2(double X, double Y);

// Upper bound on the double integral of (x^2 + y^2)^-3 over x > X, y > Y.
double g3_bound(double X, double Y);

// Uniform envelope constant: on the quadrant u, v >= 1 the second
// derivatives (in either variable) of every summand family used here,
//   (u^2 + v^2)^-2,  (3u^2 - v^2)(u^2 + v^2)^-3,  (u^2 - 3v^2)(u^2 + v^2)^-3,
// are bounded in magnitude by envelope_k * (u^2 + v^2)^-3.
inline constexpr double envelope_k = 360.0;

// Tail of the sum of m^-4 over m > M, replaced by the midpoint integral
// value 1/(3X^3) with X = M + 1/2; bound covers the midpoint-rule error.
struct OneDimTail {
  double value;
  double bound;
};
OneDimTail power4_tail(long long M);

} // namespace casimirt::tails
