#include "casimirt/classical_box.hpp"

#include "casimirt/constants.hpp"
#include "casimirt/quadrature.hpp"
#include "casimirt/series.hpp"

#include <cmath>
#include <stdexcept>

namespace casimirt::classical_box {

using constants::pi;
using constants::zeta3;

void validate(const BoxPartition& partition) {
  if (!(partition.L > 0.0)) throw std::domain_error("L must be positive");
  if (!(partition.l3 > 0.0 && partition.l3 < partition.L))
    throw std::domain_error("the wall position must satisfy 0 < l3 < L");
  if (!(partition.transverse_area > 0.0))
    throw std::domain_error("transverse_area must be positive");
}

double classical_shift_closed(const BoxPartition& partition) {
  validate(partition);
  const double a = partition.l3;
  const double b = partition.L - partition.l3;
  const double L = partition.L;
  return -zeta3 / (16.0 * pi) *
         (1.0 / (a * a) + 1.0 / (b * b) - 8.0 / (L * L));
}

ClassicalShift classical_shift_quadrature(const BoxPartition& partition,
                                          int n_max, double quad_tolerance) {
  validate(partition);
  if (n_max < 1) throw std::domain_error("n_max must be >= 1");
  if (!(quad_tolerance > 0.0))
    throw std::invalid_argument("quad_tolerance must be positive");

  const double a = partition.l3;
  const double b = partition.L - partition.l3;
  const double L = partition.L;
  const double half_L = 0.5 * L;
  const double dmin = std::min({a, b, half_L});
  const double pref = -1.0 / (8.0 * pi * std::sqrt(pi));

  // Substituting u = n t in the n-th image integral leaves an integrand
  // that does not depend on n and an explicit 1/n^3 factor, so one
  // quadrature serves all images.
  const auto integrand = [=](double u) {
    const double ea = std::exp(-(a * u) * (a * u));
    const double eb = std::exp(-(b * u) * (b * u));
    const double el = std::exp(-(half_L * u) * (half_L * u));
    return 2.0 * u * u * (a * ea + b * eb - L * el);
  };
  const auto base =
      quadrature::integrate(integrand, 0.0, 8.0 / dmin, quad_tolerance);

  CompensatedSum images;
  for (int n = n_max; n >= 1; --n) {
    const double dn = static_cast<double>(n);
    images.add(1.0 / (dn * dn * dn));
  }
  const double image_sum = images.result();

  const double s_abs = 1.0 / (a * a) + 1.0 / (b * b) + 8.0 / (L * L);
  const double tail =
      s_abs / (16.0 * pi * 2.0 * static_cast<double>(n_max) * n_max);

  return {pref * base.value * image_sum,
          std::abs(pref) * base.error * image_sum + tail, n_max};
}

ThetaPair theta_reflection(double x, int n_max) {
  if (!(x > 0.0)) throw std::domain_error("x must be positive");
  if (n_max < 0) throw std::domain_error("n_max must be >= 0");
  const double inv = 1.0 / x;
  CompensatedSum lhs;
  CompensatedSum rhs;
  for (int n = n_max; n >= 1; --n) {
    const double n2 = static_cast<double>(n) * n;
    lhs.add(2.0 * std::exp(-pi * n2 * inv));
    rhs.add(2.0 * std::exp(-pi * n2 * x));
  }
  lhs.add(1.0);
  rhs.add(1.0);
  return {lhs.result(), std::sqrt(x) * rhs.result()};
}

double em_highT_consistency(double l3, double L) {
  if (!(l3 > 0.0)) throw std::domain_error("l3 must be positive");
  if (!(L >= 100.0 * l3))
    throw std::domain_error("the limit check needs L >= 100 l3");
  const BoxPartition partition{L, l3, 1.0};
  const double plates = -zeta3 / (8.0 * pi * l3 * l3);
  return 2.0 * classical_shift_closed(partition) / plates;
}

} // namespace casimirt::classical_box
