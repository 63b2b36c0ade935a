#pragma once

#include <cstdint>

namespace casimirt::classical_box {

// Dirichlet box of length L split by a wall at l3, infinite transverse
// extent. Shifts are reported per unit transverse area in units of kT.
struct BoxPartition {
  double L = 2.0;
  double l3 = 1.0;
  double transverse_area = 1.0;
};

void validate(const BoxPartition& partition);

struct ClassicalShift {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t n_terms = 0;
};

double classical_shift_closed(const BoxPartition& partition);

ClassicalShift classical_shift_quadrature(const BoxPartition& partition,
                                          int n_max, double quad_tolerance);

// Both sides of the Jacobi identity theta(1/x) = sqrt(x) theta(x),
// truncated at |n| <= n_max.
struct ThetaPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

ThetaPair theta_reflection(double x, int n_max);

// Ratio of twice the scalar partition shift (two field polarizations) to
// the high-temperature plate result; tends to 1 as L/l3 grows. Requires
// L >= 100 l3 so the wall is far from both box ends.
double em_highT_consistency(double l3, double L);

} // namespace casimirt::classical_box
