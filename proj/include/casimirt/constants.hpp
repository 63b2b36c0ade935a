#pragma once

#include <numbers>

namespace casimirt::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double pi2 = pi * pi;
inline constexpr double pi3 = pi2 * pi;
inline constexpr double pi4 = pi2 * pi2;

// Riemann zeta values that appear in closed-form limits.
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta4 = pi4 / 90.0;

// Exact SI defining constants (2019 redefinition).
inline constexpr double planck_h_J_s = 6.62607015e-34;
inline constexpr double speed_of_light_m_s = 299792458.0;
inline constexpr double boltzmann_J_K = 1.380649e-23;
inline constexpr double elementary_charge_C = 1.602176634e-19;

inline constexpr double hbar_J_s = planck_h_J_s / (2.0 * pi);
inline constexpr double hbar_c_J_m = hbar_J_s * speed_of_light_m_s;
inline constexpr double hbar_c_eV_nm =
    hbar_c_J_m / elementary_charge_C * 1e9;
inline constexpr double boltzmann_eV_K = boltzmann_J_K / elementary_charge_C;

} // namespace casimirt::constants
