#pragma once

#include "casimirt/lattice.hpp"
#include "casimirt/series.hpp"
#include "casimirt/units.hpp"

namespace casimirt::expansion {

enum class Regime { highT, lowT };

inline const char* regime_name(Regime r) {
  return r == Regime::highT ? "highT" : "lowT";
}

// A truncated exponential expansion. estimated_error is the magnitude of
// the first omitted exponential term; all retained corrections share one
// sign, so partial sums approach the limit monotonically.
struct ExpansionResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int order = 0;
  Regime regime = Regime::highT;
};

// (a pi coth(a pi) - 1)/(2 a^2), which resums sum over n >= 1 of
// 1/(n^2 + a^2). Series branch near a = 0 where the closed form cancels.
double coth_identity(double a);

// Divisor sum over positive d | n of d^-3. Memoized; thread safe.
double sigma_minus3(long long n);

// Exponentially convergent form of Delta(z), accurate for z >= 1:
//   -pi^4/(180 z^2) + pi zeta(3)/(4 z)
//   + (pi/2z) sum_{n=1..order} e^{-2 pi n z} (1 + 2 pi n z) sigma_minus3(n).
// For z < 1 evaluate at 1/z and use the reflection property.
ExpansionResult delta_expansion(double z, int order);

// The two branches of the reduced free energy a_hat and their z-derivatives.
ExpansionResult a_hat_highT(double z, int order);
ExpansionResult a_hat_lowT(double z, int order);
ExpansionResult a_hat_prime_highT(double z, int order);
ExpansionResult a_hat_prime_lowT(double z, int order);

// All four reduced quantities from one branch (highT for z >= 1, lowT
// below), at an order chosen so each first omitted term is below tolerance.
struct ExpansionThermo {
  lattice::ReducedThermo reduced;
  double err_a = 0.0;
  double err_f = 0.0;
  double err_e = 0.0;
  double err_s = 0.0;
  int order = 0;
  Regime regime = Regime::highT;
};
ExpansionThermo reduced_thermo(double z, double tolerance);

// a_hat through the branch matching the regime of z, order chosen from the
// tolerance. Method tag records the branch.
SeriesValue auto_eval(double z, double tolerance);

// Dimensioned free energy per unit plate area from either branch.
struct PhysicalExpansion {
  double free_energy_per_area = 0.0;
  double estimated_error = 0.0;
  int order = 0;
  Regime regime = Regime::highT;
};
PhysicalExpansion free_energy_highT(const PlateGeometry& geometry,
                                    const UnitSystem& units, int order);
PhysicalExpansion free_energy_lowT(const PlateGeometry& geometry,
                                   const UnitSystem& units, int order);

} // namespace casimirt::expansion
