#pragma once

#include <vector>

namespace casimirt::orbits {

// One periodic classical path. Sign-degenerate winding choices are collapsed
// into the multiplicity instead of being emitted as mirror records:
//   interval paths   (n3 >= 1)          multiplicity 2  (two directions)
//   cylinder, nT = 0 (n3 >= 1)          multiplicity 2  (two directions)
//   cylinder, nT > 0 (n3 >= 1, nT >= 1) multiplicity 2  (+-nT merged)
// windings holds (n3) for interval paths and (n3, nT) for cylinder paths.
struct OrbitRecord {
  std::vector<int> windings;
  double length = 0.0;
  int multiplicity = 0;
};

// Paths bouncing between the plates: length 2*n3*l3, n3 >= 1, up to and
// including max_length. Sorted by length, ties by winding tuple.
std::vector<OrbitRecord> interval_orbits(double l3, double max_length);

// Paths on the l3 x lT cylinder section: length
// sqrt((2*n3*l3)^2 + (nT*lT)^2) with n3 >= 1, nT in Z. The n3 = 0 pure
// winding paths are excluded. Note the single (not doubled) factor on nT*lT.
std::vector<OrbitRecord> cylinder_orbits(double l3, double lT, double max_length);

// Length of the (n1, n2, n3) closed path in an l1 x l2 x l3 box:
// sqrt((2*l1*n1)^2 + (2*l2*n2)^2 + (2*l3*n3)^2). All-zero windings are
// rejected; no zero-length path exists.
double box_orbit_length(int n1, int n2, int n3, double l1, double l2, double l3);

// Lift of a spatial path into the periodic Euclidean-time direction:
// sqrt(base_length^2 + (nT*lT)^2).
double thermal_lift(double base_length, double lT, int nT);

enum class GeometryCase { plates, long_box_planar, general_box };

// Ratio of the electromagnetic to the scalar boundary contribution.
// Equals 2 for the planar cases; the general box has no such constant factor.
int em_scalar_factor(GeometryCase geometry_case);

} // namespace casimirt::orbits
