#include "casimirt/tails.hpp"

#include "casimirt/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace casimirt::tails {

namespace {
// Switch to a series in (a/Y)^2 below this ratio; the closed forms lose
// digits to cancellation when a << Y.
constexpr double series_ratio = 0.25;
} // namespace

double i2(double Y, double a) {
  if (!(Y > 0.0) || !(a >= 0.0))
    throw std::domain_error("i2 needs Y > 0 and a >= 0");
  const double r = a / Y;
  if (r < series_ratio) {
    // sum over k >= 0 of (-1)^k (k+1)/(2k+3) * a^(2k) / Y^(2k+3)
    const double r2 = r * r;
    double term = 1.0 / (3.0 * Y * Y * Y);
    double acc = term;
    double pow = 1.0;
    for (int k = 1; k < 40; ++k) {
      pow *= -r2;
      term = (k + 1.0) / (2.0 * k + 3.0) * pow / (Y * Y * Y);
      acc += term;
      if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    }
    return acc;
  }
  const double s = a * a + Y * Y;
  return std::atan2(a, Y) / (2.0 * a * a * a) - Y / (2.0 * a * a * s);
}

double i3(double Y, double a) {
  if (!(Y > 0.0) || !(a >= 0.0))
    throw std::domain_error("i3 needs Y > 0 and a >= 0");
  const double r = a / Y;
  if (r < series_ratio) {
    // sum over k >= 0 of (-1)^k (k+1)(k+2)/2 / (2k+5) * a^(2k) / Y^(2k+5)
    const double r2 = r * r;
    const double y5 = Y * Y * Y * Y * Y;
    double acc = 1.0 / (5.0 * y5);
    double pow = 1.0;
    for (int k = 1; k < 40; ++k) {
      pow *= -r2;
      const double term =
          0.5 * (k + 1.0) * (k + 2.0) / (2.0 * k + 5.0) * pow / y5;
      acc += term;
      if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    }
    return acc;
  }
  const double s = a * a + Y * Y;
  const double a2 = a * a;
  return 3.0 * std::atan2(a, Y) / (8.0 * a2 * a2 * a) -
         Y / (4.0 * a2 * s * s) - 3.0 * Y / (8.0 * a2 * a2 * s);
}

double g2(double X, double Y) {
  if (!(X > 0.0) || !(Y > 0.0))
    throw std::domain_error("g2 needs X, Y > 0");
  // g2 is symmetric; evaluate with the smaller argument first so the series
  // branch applies whenever the arguments are badly unbalanced.
  const double lo = X < Y ? X : Y;
  const double hi = X < Y ? Y : X;
  if (lo / hi < series_ratio) {
    // pi/(8 hi^2) - sum over k >= 0 of
    //   (-1)^k (k+1)/((2k+3)(2k+1)) * lo^(2k+1) / hi^(2k+3)
    const double r = lo / hi;
    const double r2 = r * r;
    double acc = constants::pi / (8.0 * hi * hi);
    double pow = r;
    for (int k = 0; k < 40; ++k) {
      const double term =
          (k + 1.0) / ((2.0 * k + 3.0) * (2.0 * k + 1.0)) * pow / (hi * hi);
      acc -= (k % 2 == 0) ? term : -term;
      pow *= r2;
      if (term < 1e-18 * acc) break;
    }
    return acc;
  }
  return constants::pi / (8.0 * X * X) - 1.0 / (4.0 * X * Y) +
         std::atan2(Y, X) * (1.0 / (4.0 * Y * Y) - 1.0 / (4.0 * X * X));
}

double g3_bound(double X, double Y) {
  return g2(X, Y) / (X * X + Y * Y);
}

OneDimTail power4_tail(long long M) {
  if (M < 1) throw std::domain_error("power4_tail needs M >= 1");
  const double X = static_cast<double>(M) + 0.5;
  const double x5 = X * X * X * X * X;
  // Midpoint error: (1/24)[f''(X) + integral of |f''|] with f = x^-4.
  return {1.0 / (3.0 * X * X * X), (20.0 / (X * x5) + 4.0 / x5) / 24.0};
}

} // namespace casimirt::tails
