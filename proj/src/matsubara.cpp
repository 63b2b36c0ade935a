#include "casimirt/matsubara.hpp"

#include "casimirt/constants.hpp"
#include "casimirt/errors.hpp"
#include "casimirt/expansion.hpp"
#include "casimirt/quadrature.hpp"
#include "casimirt/tails.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace casimirt::matsubara {

using constants::pi;
using constants::pi2;

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0))
    throw std::domain_error(std::string(name) + " must be positive");
}

void require_tolerance(double tolerance) {
  if (!(tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
}

double j_series(double alpha, double tolerance) {
  // f(m) = alpha/(m^2 + alpha^2); |f''| <= 6 alpha (m^2 + alpha^2)^-2.
  long long M = 16;
  double rem = 0.0;
  for (;;) {
    const double X = static_cast<double>(M) + 0.5;
    const double s = X * X + alpha * alpha;
    rem = 0.25 * alpha * (1.0 / (s * s) + tails::i2(X, alpha));
    if (rem <= tolerance) break;
    if (M > (1LL << 34))
      throw convergence_error("frequency series for J did not converge", rem);
    M += M / 2 + 1;
  }
  const double X = static_cast<double>(M) + 0.5;
  CompensatedSum acc;
  for (long long m = M; m >= 1; --m) {
    const double dm = static_cast<double>(m);
    acc.add(alpha / (dm * dm + alpha * alpha));
  }
  return acc.result() + std::atan2(alpha, X);
}

double j_quadrature(double alpha, double tolerance) {
  if (alpha > j_quadrature_alpha_max)
    throw convergence_error(
        "oscillatory quadrature is unreliable beyond alpha = " +
            std::to_string(j_quadrature_alpha_max) +
            "; use the series route",
        1.0);
  const auto integrand = [alpha](double y) {
    if (y == 0.0) return alpha;
    return std::sin(alpha * y) / std::expm1(y);
  };
  // Integrate between consecutive zeros of the sine; the pieces alternate
  // in sign under a decaying envelope, so the first omitted piece bounds
  // the rest.
  const double width = pi / alpha;
  CompensatedSum acc;
  double last = 0.0;
  constexpr int max_pieces = 2000;
  for (int k = 0; k < max_pieces; ++k) {
    const auto piece = quadrature::integrate(
        integrand, k * width, (k + 1) * width, 1e-13);
    acc.add(piece.value);
    last = std::abs(piece.value);
    if (k >= 2 && last <= 0.25 * tolerance) return acc.result();
  }
  throw convergence_error("sine-interval sum for J did not converge", last);
}

} // namespace

double J_integral(double alpha, JMethod method, double tolerance) {
  if (!(alpha >= 0.0)) throw std::domain_error("alpha must be >= 0");
  require_tolerance(tolerance);
  if (alpha == 0.0) return 0.0;
  switch (method) {
    case JMethod::closed:
      return alpha * expansion::coth_identity(alpha);
    case JMethod::series:
      return j_series(alpha, tolerance);
    case JMethod::quadrature:
      return j_quadrature(alpha, tolerance);
  }
  throw std::invalid_argument("unknown J method");
}

SeriesValue c_core(double alpha, double tolerance) {
  if (!(alpha >= 0.0)) throw std::domain_error("alpha must be >= 0");
  require_tolerance(tolerance);
  const double a2 = alpha * alpha;
  long long M = 16;
  double bound = 0.0;
  for (;;) {
    const double X = static_cast<double>(M) + 0.5;
    const double s = X * X + a2;
    bound = tails::envelope_k / 24.0 *
            (1.0 / (s * s * s) + tails::i3(X, alpha));
    if (bound <= tolerance) break;
    if (M > (1LL << 34))
      throw convergence_error("frequency core sum did not converge", bound);
    M += M / 2 + 1;
  }
  const double X = static_cast<double>(M) + 0.5;
  CompensatedSum acc;
  for (long long m = M; m >= 1; --m) {
    const double m2 = static_cast<double>(m) * static_cast<double>(m);
    const double inv = 1.0 / (m2 + a2);
    acc.add((3.0 * m2 - a2) * inv * inv * inv);
  }
  const double s = X * X + a2;
  acc.add(X / (s * s));
  return {acc.result(), bound, M, Method::oracle};
}

double c_coefficient(double alpha, double beta, double l3, double tolerance) {
  require_positive(beta, "beta");
  require_positive(l3, "l3");
  return beta / (2.0 * pi2 * l3) * c_core(alpha, tolerance).value;
}

namespace {

// Bound on the part of 2 sum_{n > N} core(n/z) left over after the exact
// 1/(2 alpha^4) piece is removed. That remainder is -(2 pi^3/alpha) times
// sum_{k>=1} k^2 e^{-2 pi alpha k}, so its magnitude decays geometrically
// in n with ratio at most e^{-2 pi / z}.
double exp_tail_bound(double z, long long N) {
  const double r = std::exp(-2.0 * pi / z);
  const double x = std::exp(-2.0 * pi * (static_cast<double>(N) + 1.0) / z);
  if (x == 0.0) return 0.0;
  const double one_minus = 1.0 - x;
  const double s = x * (1.0 + x) / (one_minus * one_minus * one_minus);
  const double first =
      4.0 * pi * pi2 * z / (static_cast<double>(N) + 1.0) * s;
  return first / (1.0 - r);
}

} // namespace

SeriesValue force_matsubara_reduced(double z, double tolerance,
                                    lattice::Execution exec) {
  if (!(z >= 0.0)) throw std::domain_error("z must be >= 0");
  require_tolerance(tolerance);

  const double core_total = 0.30 * 8.0 * pi2 * tolerance;
  const double tail_total = 0.30 * 8.0 * pi2 * tolerance;

  // The discarded n > N frequencies contribute z^4 sum n^-4 exactly, plus
  // an exponentially small remainder; both get rigorous bounds.
  long long N = 0;
  double tail_value = 0.0;
  double tail_bound = 0.0;
  const double z4 = z * z * z * z;
  if (z > 0.0) {
    N = std::max<long long>(8, static_cast<long long>(std::ceil(2.0 * z)));
    for (;;) {
      const auto p4 = tails::power4_tail(N);
      const double eb = exp_tail_bound(z, N);
      if (z4 * p4.bound + eb <= tail_total) {
        tail_value = z4 * p4.value;
        tail_bound = z4 * p4.bound + eb;
        break;
      }
      if (N > (1LL << 40))
        throw convergence_error("frequency cutoff did not converge",
                                z4 * p4.bound + eb);
      N += N / 4 + 4;
    }
  }

  std::vector<SeriesValue> cores(static_cast<size_t>(N) + 1);
  const double budget = core_total / (2.0 * (static_cast<double>(N) + 1.0));
  if (exec == lattice::Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long n = 0; n <= N; ++n)
      cores[static_cast<size_t>(n)] =
          c_core(n == 0 ? 0.0 : static_cast<double>(n) / z, budget);
  } else {
    for (long long n = 0; n <= N; ++n)
      cores[static_cast<size_t>(n)] =
          c_core(n == 0 ? 0.0 : static_cast<double>(n) / z, budget);
  }

  CompensatedSum bracket;
  bracket.add(tail_value);
  double bound = tail_bound;
  std::int64_t terms = 0;
  for (long long n = N; n >= 1; --n) {
    const auto& cv = cores[static_cast<size_t>(n)];
    bracket.add(2.0 * cv.value);
    bound += 2.0 * cv.tail_bound;
    terms += cv.terms_used;
  }
  bracket.add(cores[0].value);
  bound += cores[0].tail_bound;
  terms += cores[0].terms_used;

  const double pref = 1.0 / (8.0 * pi2);
  return {-pref * bracket.result(), pref * bound, terms, Method::oracle};
}

SeriesValue force_matsubara(const PlateGeometry& geometry,
                            const UnitSystem& units, double tolerance,
                            lattice::Execution exec) {
  validate(geometry);
  const auto state = reduced_z(geometry, units);
  auto reduced = force_matsubara_reduced(state.z, tolerance, exec);
  const double l3 = geometry.l3;
  const double s = units.hbar_c / (l3 * l3 * l3 * l3);
  reduced.value *= s;
  reduced.tail_bound *= s;
  return reduced;
}

double mode_free_energy(double omega, double beta) {
  require_positive(omega, "omega");
  require_positive(beta, "beta");
  return 0.5 * omega + std::log1p(-std::exp(-beta * omega)) / beta;
}

double mode_free_energy_sinh(double omega, double beta) {
  require_positive(omega, "omega");
  require_positive(beta, "beta");
  return std::log(2.0 * std::sinh(0.5 * beta * omega)) / beta;
}

ModeMatsubaraResult mode_free_energy_matsubara(double omega, double beta,
                                               long long n_max,
                                               double reference_omega) {
  require_positive(omega, "omega");
  require_positive(reference_omega, "reference_omega");
  require_positive(beta, "beta");
  if (n_max < 0) throw std::domain_error("n_max must be >= 0");

  const double w2 = omega * omega;
  const double r2 = reference_omega * reference_omega;
  const double dw2 = w2 - r2;

  CompensatedSum acc;
  for (long long n = n_max; n >= 1; --n) {
    const double nu = 2.0 * pi * static_cast<double>(n) / beta;
    acc.add(std::log1p(dw2 / (r2 + nu * nu)));
  }
  double value =
      (std::log(omega / reference_omega) + acc.result()) / beta;

  // Exact integral of the discarded |n| > n_max tail of
  // (1/2) ln((omega^2 + nu^2)/(ref^2 + nu^2)); only the midpoint-rule
  // error of that replacement survives as truncation_error.
  const double Y = 2.0 * pi * (static_cast<double>(n_max) + 0.5) / beta;
  const double integral = pi * (omega - reference_omega) -
                          Y * std::log1p(dw2 / (r2 + Y * Y)) -
                          2.0 * omega * std::atan2(Y, omega) +
                          2.0 * reference_omega * std::atan2(Y, reference_omega);
  value += integral / (2.0 * pi);

  const double scale = std::max(omega, reference_omega);
  const double c = std::abs(dw2);
  double h2_at_y;
  double h2_integral;
  if (Y >= 2.0 * scale) {
    h2_at_y = 12.0 * c / (Y * Y * Y * Y);
    h2_integral = 4.0 * c / (Y * Y * Y);
  } else {
    h2_at_y = 4.0 / (Y * Y);
    h2_integral = 4.0 / Y;
  }
  const double step = 2.0 * pi / beta;
  const double rem =
      (step * step * (h2_at_y + h2_integral / step) / 24.0) / beta;
  return {value, rem};
}

ModeSpectrum make_mode_spectrum(std::vector<Mode> modes, std::string label) {
  for (const auto& m : modes)
    if (!(m.frequency > 0.0))
      throw std::domain_error("mode frequencies must be positive");
  std::stable_sort(modes.begin(), modes.end(),
                   [](const Mode& a, const Mode& b) {
                     if (a.frequency != b.frequency)
                       return a.frequency < b.frequency;
                     return a.quantum_numbers < b.quantum_numbers;
                   });
  return {std::move(modes), std::move(label)};
}

ClassicalDiff classical_diff(const ModeSpectrum& spectrum_a,
                             const ModeSpectrum& spectrum_b,
                             double temperature) {
  require_positive(temperature, "temperature");
  if (spectrum_a.modes.size() != spectrum_b.modes.size())
    throw std::invalid_argument(
        "spectra cannot be paired: mode counts differ");
  std::map<std::vector<int>, double> by_numbers;
  for (const auto& m : spectrum_b.modes) {
    if (!by_numbers.emplace(m.quantum_numbers, m.frequency).second)
      throw std::invalid_argument(
          "spectra cannot be paired: duplicate quantum numbers");
  }
  const double beta = 1.0 / temperature;
  ClassicalDiff out;
  for (const auto& m : spectrum_a.modes) {
    const auto it = by_numbers.find(m.quantum_numbers);
    if (it == by_numbers.end())
      throw std::invalid_argument(
          "spectra cannot be paired: quantum numbers do not match");
    out.classical += temperature * std::log(it->second / m.frequency);
    out.exact += mode_free_energy(it->second, beta) -
                 mode_free_energy(m.frequency, beta);
  }
  return out;
}

std::vector<MatsubaraEnergy> cubic_cavity_spectrum(double side, double lT,
                                                   int n_spatial_max,
                                                   int n_T_max) {
  require_positive(side, "side");
  require_positive(lT, "lT");
  if (n_spatial_max < 1)
    throw std::domain_error("n_spatial_max must be >= 1");
  if (n_T_max < 0) throw std::domain_error("n_T_max must be >= 0");

  const double inv_s2 = 1.0 / (side * side);
  const double half_lT = 0.5 * lT;
  const double inv_t2 = 1.0 / (half_lT * half_lT);

  std::vector<MatsubaraEnergy> out;
  out.reserve(static_cast<size_t>(n_spatial_max) * n_spatial_max *
              n_spatial_max * (2 * n_T_max + 1));
  long long k_index = 0;
  for (int n1 = 1; n1 <= n_spatial_max; ++n1)
    for (int n2 = 1; n2 <= n_spatial_max; ++n2)
      for (int n3 = 1; n3 <= n_spatial_max; ++n3) {
        const double spatial =
            (static_cast<double>(n1) * n1 + static_cast<double>(n2) * n2 +
             static_cast<double>(n3) * n3) *
            inv_s2;
        for (int n = -n_T_max; n <= n_T_max; ++n) {
          const double e =
              pi * std::sqrt(spatial + static_cast<double>(n) * n * inv_t2);
          out.push_back({e, k_index, n});
        }
        ++k_index;
      }
  std::stable_sort(out.begin(), out.end(),
                   [](const MatsubaraEnergy& a, const MatsubaraEnergy& b) {
                     if (a.E_kn != b.E_kn) return a.E_kn < b.E_kn;
                     if (a.k_index != b.k_index) return a.k_index < b.k_index;
                     return a.n < b.n;
                   });
  return out;
}

Histogram spectral_density_histogram(
    const std::vector<MatsubaraEnergy>& spectrum, double bin_width) {
  if (spectrum.empty())
    throw std::invalid_argument("cannot histogram an empty spectrum");
  require_positive(bin_width, "bin_width");
  Histogram h;
  h.bin_width = bin_width;
  for (const auto& mode : spectrum) {
    const auto bin = static_cast<size_t>(mode.E_kn / bin_width);
    if (bin >= h.counts.size()) h.counts.resize(bin + 1, 0);
    ++h.counts[bin];
  }
  return h;
}

} // namespace casimirt::matsubara
