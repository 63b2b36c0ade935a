#include "casimirt/expansion.hpp"

#include "casimirt/constants.hpp"
#include "casimirt/errors.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimirt::expansion {

using constants::pi;
using constants::pi2;
using constants::pi4;
using constants::zeta3;

namespace {

constexpr int max_order = 64;

double require_positive(double v, const char* name) {
  if (!(v > 0.0))
    throw std::domain_error(std::string(name) + " must be positive");
  return v;
}

void require_order(int order) {
  if (order < 0) throw std::domain_error("order must be >= 0");
}

// Magnitudes of the k-th exponential terms of each branch and of its
// z-derivative; used both for the retained sums and the first-omitted-term
// error estimates.
double high_term(double z, int k) {
  const double w = 2.0 * pi * k * z;
  return z / (8.0 * pi) * (1.0 + w) * std::exp(-w) * sigma_minus3(k);
}

double high_prime_term(double z, int k) {
  const double w = 2.0 * pi * k * z;
  return 1.0 / (8.0 * pi) * (1.0 + w - w * w) * std::exp(-w) *
         sigma_minus3(k);
}

double low_term(double z, int k) {
  if (z == 0.0) return 0.0;
  const double w = 2.0 * pi * k / z;
  const double z3 = z * z * z;
  return z3 / (8.0 * pi) * (1.0 + w) * std::exp(-w) * sigma_minus3(k);
}

double low_prime_term(double z, int k) {
  if (z == 0.0) return 0.0;
  const double w = 2.0 * pi * k / z;
  return 1.0 / (8.0 * pi) *
         (3.0 * z * z + 6.0 * pi * k * z + 4.0 * pi2 * k * k) *
         std::exp(-w) * sigma_minus3(k);
}

} // namespace

double coth_identity(double a) {
  require_positive(a, "a");
  const double x = pi * a;
  if (x < 0.1) {
    // zeta(2) - zeta(4) a^2 + zeta(6) a^4 - ... (alternating, tiny a)
    constexpr double z2 = pi2 / 6.0;
    constexpr double z4 = pi4 / 90.0;
    constexpr double z6 = pi2 * pi4 / 945.0;
    constexpr double z8 = pi4 * pi4 / 9450.0;
    constexpr double z10 = pi2 * pi4 * pi4 / 93555.0;
    constexpr double z12 = 691.0 * pi4 * pi4 * pi4 / 638512875.0;
    const double a2 = a * a;
    return z2 - a2 * (z4 - a2 * (z6 - a2 * (z8 - a2 * (z10 - a2 * z12))));
  }
  return (x / std::tanh(x) - 1.0) / (2.0 * a * a);
}

double sigma_minus3(long long n) {
  if (n < 1) throw std::domain_error("sigma_minus3 needs n >= 1");
  static std::vector<double> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  if (n <= static_cast<long long>(memo.size())) return memo[n - 1];
  for (long long k = memo.size() + 1; k <= n; ++k) {
    double s = 0.0;
    for (long long d = 1; d * d <= k; ++d) {
      if (k % d != 0) continue;
      s += 1.0 / (static_cast<double>(d) * d * d);
      const long long q = k / d;
      if (q != d) s += 1.0 / (static_cast<double>(q) * q * q);
    }
    memo.push_back(s);
  }
  return memo[n - 1];
}

ExpansionResult delta_expansion(double z, int order) {
  require_positive(z, "z");
  require_order(order);
  double value = -pi4 / (180.0 * z * z) + pi * zeta3 / (4.0 * z);
  for (int k = 1; k <= order; ++k) {
    const double w = 2.0 * pi * k * z;
    value += pi / (2.0 * z) * std::exp(-w) * (1.0 + w) * sigma_minus3(k);
  }
  const double w1 = 2.0 * pi * (order + 1) * z;
  const double err =
      pi / (2.0 * z) * std::exp(-w1) * (1.0 + w1) * sigma_minus3(order + 1);
  return {value, err, order, Regime::highT};
}

ExpansionResult a_hat_highT(double z, int order) {
  if (!(z >= 0.0)) throw std::domain_error("z must be >= 0");
  require_order(order);
  double value = -zeta3 * z / (16.0 * pi);
  for (int k = 1; k <= order; ++k) value -= high_term(z, k);
  return {value, std::abs(high_term(z, order + 1)), order, Regime::highT};
}

ExpansionResult a_hat_lowT(double z, int order) {
  if (!(z >= 0.0)) throw std::domain_error("z must be >= 0");
  require_order(order);
  const double z3 = z * z * z;
  double value = -pi2 / 720.0 + pi2 * z3 * z / 720.0 - zeta3 * z3 / (16.0 * pi);
  for (int k = 1; k <= order; ++k) value -= low_term(z, k);
  return {value, std::abs(low_term(z, order + 1)), order, Regime::lowT};
}

ExpansionResult a_hat_prime_highT(double z, int order) {
  if (!(z >= 0.0)) throw std::domain_error("z must be >= 0");
  require_order(order);
  double value = -zeta3 / (16.0 * pi);
  for (int k = 1; k <= order; ++k) value -= high_prime_term(z, k);
  return {value, std::abs(high_prime_term(z, order + 1)), order,
          Regime::highT};
}

ExpansionResult a_hat_prime_lowT(double z, int order) {
  if (!(z >= 0.0)) throw std::domain_error("z must be >= 0");
  require_order(order);
  double value = pi2 * z * z * z / 180.0 - 3.0 * zeta3 * z * z / (16.0 * pi);
  for (int k = 1; k <= order; ++k) value -= low_prime_term(z, k);
  return {value, std::abs(low_prime_term(z, order + 1)), order, Regime::lowT};
}

namespace {

int order_for(double z, double tolerance, Regime regime) {
  for (int k = 0; k <= max_order; ++k) {
    const double err = regime == Regime::highT
                           ? std::abs(high_term(z, k + 1))
                           : std::abs(low_term(z, k + 1));
    if (err <= tolerance) return k;
  }
  throw convergence_error("expansion order capped before reaching tolerance",
                          regime == Regime::highT
                              ? std::abs(high_term(z, max_order + 1))
                              : std::abs(low_term(z, max_order + 1)));
}

} // namespace

ExpansionThermo reduced_thermo(double z, double tolerance) {
  if (!(z >= 0.0)) throw std::domain_error("z must be >= 0");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  const Regime regime = z >= 1.0 ? Regime::highT : Regime::lowT;
  const int order = order_for(z, tolerance, regime);

  const auto a = regime == Regime::highT ? a_hat_highT(z, order)
                                         : a_hat_lowT(z, order);
  const auto ap = regime == Regime::highT ? a_hat_prime_highT(z, order)
                                          : a_hat_prime_lowT(z, order);
  ExpansionThermo out;
  out.reduced.a_hat = a.value;
  out.reduced.f_hat = 3.0 * a.value - z * ap.value;
  out.reduced.e_hat = a.value - z * ap.value;
  out.reduced.s_hat = z == 0.0 ? 0.0 : -2.0 * ap.value;
  out.err_a = a.estimated_error;
  out.err_f = 3.0 * a.estimated_error + z * ap.estimated_error;
  out.err_e = a.estimated_error + z * ap.estimated_error;
  out.err_s = 2.0 * ap.estimated_error;
  out.order = order;
  out.regime = regime;
  return out;
}

SeriesValue auto_eval(double z, double tolerance) {
  if (!(z >= 0.0)) throw std::domain_error("z must be >= 0");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  const Regime regime = z >= 1.0 ? Regime::highT : Regime::lowT;
  const int order = order_for(z, tolerance, regime);
  const auto r = regime == Regime::highT ? a_hat_highT(z, order)
                                         : a_hat_lowT(z, order);
  return {r.value, r.estimated_error, order,
          regime == Regime::highT ? Method::expansion_highT
                                  : Method::expansion_lowT};
}

namespace {

PhysicalExpansion scale_to_area(const ExpansionResult& r,
                                const PlateGeometry& geometry,
                                const UnitSystem& units) {
  const double l3 = geometry.l3;
  const double s = units.hbar_c / (l3 * l3 * l3);
  return {r.value * s, r.estimated_error * s, r.order, r.regime};
}

} // namespace

PhysicalExpansion free_energy_highT(const PlateGeometry& geometry,
                                    const UnitSystem& units, int order) {
  validate(geometry);
  const auto state = reduced_z(geometry, units);
  return scale_to_area(a_hat_highT(state.z, order), geometry, units);
}

PhysicalExpansion free_energy_lowT(const PlateGeometry& geometry,
                                   const UnitSystem& units, int order) {
  validate(geometry);
  const auto state = reduced_z(geometry, units);
  return scale_to_area(a_hat_lowT(state.z, order), geometry, units);
}

} // namespace casimirt::expansion
