#pragma once

#include "casimirt/constants.hpp"

namespace casimirt {

enum class UnitMode { natural, si };

// Unit system descriptor. Natural mode sets hbar*c = k_B = 1 with lengths in
// meters and temperatures carried as k_B T/(hbar c), i.e. inverse meters.
// SI mode works in joules, meters, kelvin.
struct UnitSystem {
  UnitMode mode = UnitMode::natural;
  double hbar_c = 1.0;    // energy * length
  double boltzmann = 1.0; // energy / temperature

  static UnitSystem natural() { return {UnitMode::natural, 1.0, 1.0}; }
  static UnitSystem si() {
    return {UnitMode::si, constants::hbar_c_J_m, constants::boltzmann_J_K};
  }
};

// Parallel plates of area l1*l2 at separation l3, held at a fixed
// temperature. temperature = 0 represents the exact zero-temperature case.
struct PlateGeometry {
  double l1 = 1.0;
  double l2 = 1.0;
  double l3 = 1.0;
  double temperature = 0.0;
};

// The single reduced variable z = 2*l3/l_T all reduced functions depend on,
// together with the thermal length itself (infinite at T = 0).
struct DimensionlessState {
  double z = 0.0;
  double lT = 0.0;
};

void validate(const PlateGeometry& g);
double area(const PlateGeometry& g);

// l_T = hbar*c/(k_B T). Throws for T <= 0; the T = 0 path must be taken
// through reduced_z, which flags the thermal length as infinite.
double thermal_length(double temperature, const UnitSystem& units);

DimensionlessState reduced_z(const PlateGeometry& g, const UnitSystem& units);

// Temperature conversions: natural temperatures are k_B T/(hbar c) in 1/m.
double temperature_to_natural(double temperature, const UnitSystem& from);
double temperature_from_natural(double t_natural, const UnitSystem& to);

PlateGeometry geometry_to_natural(const PlateGeometry& g, const UnitSystem& from);
PlateGeometry geometry_from_natural(const PlateGeometry& g, const UnitSystem& to);

} // namespace casimirt
