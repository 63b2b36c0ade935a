#include "casimirt/units.hpp"

#include <limits>
#include <stdexcept>

namespace casimirt {

void validate(const PlateGeometry& g) {
  if (!(g.l3 > 0.0))
    throw std::domain_error("plate separation l3 must be positive");
  if (!(g.l1 > 0.0) || !(g.l2 > 0.0))
    throw std::domain_error("plate edges l1, l2 must be positive");
  if (!(g.temperature >= 0.0))
    throw std::domain_error("temperature must be >= 0");
}

double area(const PlateGeometry& g) { return g.l1 * g.l2; }

double thermal_length(double temperature, const UnitSystem& units) {
  if (!(temperature > 0.0))
    throw std::domain_error(
        "thermal length is infinite at T <= 0; use the T = 0 code path");
  return units.hbar_c / (units.boltzmann * temperature);
}

DimensionlessState reduced_z(const PlateGeometry& g, const UnitSystem& units) {
  validate(g);
  if (g.temperature == 0.0)
    return {0.0, std::numeric_limits<double>::infinity()};
  const double lT = thermal_length(g.temperature, units);
  return {2.0 * g.l3 / lT, lT};
}

double temperature_to_natural(double temperature, const UnitSystem& from) {
  return temperature * from.boltzmann / from.hbar_c;
}

double temperature_from_natural(double t_natural, const UnitSystem& to) {
  return t_natural * to.hbar_c / to.boltzmann;
}

PlateGeometry geometry_to_natural(const PlateGeometry& g, const UnitSystem& from) {
  PlateGeometry out = g;
  out.temperature = temperature_to_natural(g.temperature, from);
  return out;
}

PlateGeometry geometry_from_natural(const PlateGeometry& g, const UnitSystem& to) {
  PlateGeometry out = g;
  out.temperature = temperature_from_natural(g.temperature, to);
  return out;
}

} // namespace casimirt
