#pragma once

#include "casimirt/lattice.hpp"
#include "casimirt/series.hpp"
#include "casimirt/units.hpp"

#include <string>
#include <vector>

namespace casimirt::matsubara {

enum class JMethod { quadrature, series, closed };

// J(alpha) = integral over y > 0 of sin(alpha y)/(e^y - 1)
//          = sum over m >= 1 of alpha/(m^2 + alpha^2).
// The quadrature route splits at the zeros of the sine and bounds its tail
// by the alternating-series estimate; it refuses alpha beyond
// j_quadrature_alpha_max, where the series route is authoritative.
inline constexpr double j_quadrature_alpha_max = 50.0;
double J_integral(double alpha, JMethod method, double tolerance = 1e-10);

// c(alpha) = (beta/(2 pi^2 l3)) sum over m >= 1 of
//            (3 m^2 - alpha^2)/(m^2 + alpha^2)^3.
double c_coefficient(double alpha, double beta, double l3,
                     double tolerance = 1e-12);

// The dimensionless core sum of c(alpha), with a rigorous tail bound.
SeriesValue c_core(double alpha, double tolerance = 1e-12);

// Force per unit area from the Matsubara frequency sum
//   F/Area = -(1/(4 beta l3^3)) sum over n in Z of c(n lT/(2 l3)),
// organized column-major over frequencies so it shares no truncation
// machinery with the winding-lattice engine it cross-checks. Negative
// values mean attraction, matching that engine's convention.
SeriesValue force_matsubara_reduced(
    double z, double tolerance = 1e-12,
    lattice::Execution exec = lattice::Execution::parallel);
SeriesValue force_matsubara(
    const PlateGeometry& geometry, const UnitSystem& units,
    double tolerance = 1e-12,
    lattice::Execution exec = lattice::Execution::parallel);

// Free energy of one cavity mode, hbar = 1: omega/2 + ln(1 - e^-beta omega)/beta,
// and the equivalent ln(2 sinh(beta omega/2))/beta form.
double mode_free_energy(double omega, double beta);
double mode_free_energy_sinh(double omega, double beta);

// Regularized Matsubara product form of the difference
// mode_free_energy(omega) - mode_free_energy(reference_omega): the
// frequency sum over |n| <= n_max plus the closed-form integral of the
// discarded tail, which dominates plain truncation by several orders.
struct ModeMatsubaraResult {
  double value = 0.0;
  double truncation_error = 0.0;
};
ModeMatsubaraResult mode_free_energy_matsubara(double omega, double beta,
                                               long long n_max,
                                               double reference_omega);

struct Mode {
  std::vector<int> quantum_numbers;
  double frequency = 0.0;
};

struct ModeSpectrum {
  std::vector<Mode> modes;
  std::string label;
};

// Sorts ascending by frequency (ties by quantum numbers) and validates
// positivity.
ModeSpectrum make_mode_spectrum(std::vector<Mode> modes, std::string label);

// High-temperature free-energy difference k_B T sum of ln(omega_b/omega_a)
// between adiabatically connected spectra (modes paired by quantum
// numbers), alongside the exact single-mode difference.
struct ClassicalDiff {
  double classical = 0.0;
  double exact = 0.0;
};
ClassicalDiff classical_diff(const ModeSpectrum& spectrum_a,
                             const ModeSpectrum& spectrum_b,
                             double temperature);

// One Euclidean 4D mode of the periodic-time cavity:
// E(k, n) = sqrt(E_k^2 + (2 pi n/beta)^2).
struct MatsubaraEnergy {
  double E_kn = 0.0;
  long long k_index = 0;
  int n = 0;
};

// Dirichlet cube of the given side with the periodic dimension of length
// lT/2: E = pi sqrt((n1^2 + n2^2 + n3^2)/side^2 + n^2/(lT/2)^2) over
// 1 <= ni <= n_spatial_max, |n| <= n_T_max (hbar = c = 1). Sorted
// ascending; k_index identifies the spatial triple in lexicographic order.
std::vector<MatsubaraEnergy> cubic_cavity_spectrum(double side, double lT,
                                                   int n_spatial_max,
                                                   int n_T_max);

struct Histogram {
  double bin_width = 0.0;
  std::vector<long long> counts;
};

Histogram spectral_density_histogram(
    const std::vector<MatsubaraEnergy>& spectrum, double bin_width);

} // namespace casimirt::matsubara
