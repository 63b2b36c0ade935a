#include "casimirt/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace casimirt::orbits {

namespace {

void validate_positive(double v, const char* name) {
  if (!(v > 0.0))
    throw std::domain_error(std::string(name) + " must be positive");
}

void sort_records(std::vector<OrbitRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const OrbitRecord& a, const OrbitRecord& b) {
                     if (a.length != b.length) return a.length < b.length;
                     return a.windings < b.windings;
                   });
}

} // namespace

std::vector<OrbitRecord> interval_orbits(double l3, double max_length) {
  validate_positive(l3, "l3");
  validate_positive(max_length, "max_length");
  std::vector<OrbitRecord> out;
  for (int n3 = 1;; ++n3) {
    const double length = 2.0 * n3 * l3;
    if (length > max_length) break;
    out.push_back({{n3}, length, 2});
  }
  return out;
}

std::vector<OrbitRecord> cylinder_orbits(double l3, double lT, double max_length) {
  validate_positive(l3, "l3");
  validate_positive(lT, "lT");
  validate_positive(max_length, "max_length");
  const double cutoff_sq = max_length * max_length;
  std::vector<OrbitRecord> out;
  for (int n3 = 1;; ++n3) {
    const double axial = 2.0 * n3 * l3;
    const double axial_sq = axial * axial;
    if (axial_sq > cutoff_sq) break;
    out.push_back({{n3, 0}, axial, 2});
    for (int nT = 1;; ++nT) {
      const double wind = nT * lT;
      const double length_sq = axial_sq + wind * wind;
      if (length_sq > cutoff_sq) break;
      out.push_back({{n3, nT}, std::sqrt(length_sq), 2});
    }
  }
  sort_records(out);
  return out;
}

double box_orbit_length(int n1, int n2, int n3,
                        double l1, double l2, double l3) {
  validate_positive(l1, "l1");
  validate_positive(l2, "l2");
  validate_positive(l3, "l3");
  if (n1 == 0 && n2 == 0 && n3 == 0)
    throw std::domain_error("box path needs a nonzero winding");
  const double a = 2.0 * l1 * n1;
  const double b = 2.0 * l2 * n2;
  const double c = 2.0 * l3 * n3;
  return std::sqrt(a * a + b * b + c * c);
}

double thermal_lift(double base_length, double lT, int nT) {
  validate_positive(base_length, "base_length");
  validate_positive(lT, "lT");
  const double wind = nT * lT;
  return std::sqrt(base_length * base_length + wind * wind);
}

int em_scalar_factor(GeometryCase geometry_case) {
  switch (geometry_case) {
    case GeometryCase::plates:
    case GeometryCase::long_box_planar:
      return 2;
    case GeometryCase::general_box:
      break;
  }
  throw std::invalid_argument(
      "no constant electromagnetic/scalar factor exists for a general box");
}

} // namespace casimirt::orbits
