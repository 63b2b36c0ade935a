#pragma once

#include "casimirt/series.hpp"
#include "casimirt/units.hpp"

#include <cstdint>

namespace casimirt::lattice {

enum class Execution { serial, parallel };

inline constexpr double default_tolerance = 1e-12;

// Reduced thermodynamic quantities of the plate gap:
//   a_hat = A^T l3^3 / (hbar c Area)     free energy
//   f_hat = F^T l3^4 / (hbar c Area)     force, F = -dA/dl3 (negative =
//                                        attraction)
//   e_hat = E^T l3^3 / (hbar c Area)     energy, E = d(beta A)/dbeta
//   s_hat = S l3^2 / (k_B Area)          entropy, S = (E - A)/T
struct ReducedThermo {
  double a_hat = 0.0;
  double f_hat = 0.0;
  double e_hat = 0.0;
  double s_hat = 0.0;
};

struct LatticeThermo {
  ReducedThermo reduced;
  double bound_a = 0.0;
  double bound_f = 0.0;
  double bound_e = 0.0;
  double bound_s = 0.0;
  std::int64_t terms_used = 0;
  Method method = Method::lattice;
};

// Evaluates all four reduced quantities from the winding lattice in one
// sweep. For z < 1e-3 or z > 1e3 the evaluation is delegated to the dual
// expansions, which are exponentially accurate there; the method tag
// records which route produced the numbers.
LatticeThermo reduced_thermo(double z, double tolerance = default_tolerance,
                             Execution exec = Execution::parallel);

SeriesValue a_hat_lattice(double z, double tolerance = default_tolerance,
                          Execution exec = Execution::parallel);
SeriesValue f_hat_lattice(double z, double tolerance = default_tolerance,
                          Execution exec = Execution::parallel);
SeriesValue e_hat_lattice(double z, double tolerance = default_tolerance,
                          Execution exec = Execution::parallel);
SeriesValue s_hat_lattice(double z, double tolerance = default_tolerance,
                          Execution exec = Execution::parallel);

// Delta(z) = sum over m, n >= 1 of (m^2 z + n^2/z)^-2, the double series
// obeying the reflection property Delta(z) = Delta(1/z). Always evaluated
// from the lattice (never delegated), with a rigorous tail bound, so the
// reflection check probes two genuinely different truncation rectangles.
SeriesValue delta_of_z(double z, double tolerance = default_tolerance,
                       Execution exec = Execution::parallel);

enum class FieldMode { em, scalar };

// Dimensioned per-area results in the requested unit system. The lattice
// baseline is the electromagnetic (two-polarization) value; scalar results
// are obtained through the planar electromagnetic/scalar factor.
struct PhysicalThermo {
  DimensionlessState state;
  double free_energy_per_area = 0.0;
  double force_per_area = 0.0;
  double energy_per_area = 0.0;
  double entropy_per_area = 0.0;
  Method method = Method::lattice;
  double reduced_tail_bound = 0.0;
};

PhysicalThermo physical_thermo(const PlateGeometry& geometry,
                               const UnitSystem& units,
                               double tolerance = default_tolerance,
                               FieldMode field = FieldMode::em,
                               Execution exec = Execution::parallel);

namespace detail {

// Truncated quadrant sums over m in [1, M], n in [1, N] of the three
// kernels (with u = c*n)
//   q_a: (m^2 + u^2)^-2
//   q_f: (3m^2 - u^2)(m^2 + u^2)^-3
//   q_e: (m^2 - 3u^2)(m^2 + u^2)^-3
// including the closed-form integral corrections for the discarded rows,
// columns, and corner. remainder_bound bounds the residual error of each of
// the three corrected sums individually.
struct QuadrantSums {
  double q_a = 0.0;
  double q_f = 0.0;
  double q_e = 0.0;
  double remainder_bound = 0.0;
  std::int64_t terms = 0;
};

QuadrantSums quadrant_sums(double c, long long M, long long N,
                           Execution exec);

// Upper bound on quadrant_sums' residual for a proposed rectangle, without
// performing the O(M*N) summation.
double quadrant_bound(double c, long long M, long long N);

struct Rectangle {
  long long M = 0;
  long long N = 0;
};

// Smallest balanced rectangle whose remainder bound is below the target.
Rectangle choose_rectangle(double c, double target_bound);

} // namespace detail

} // namespace casimirt::lattice
