#pragma once

#include <functional>

namespace casimirt::quadrature {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive Gauss-Kronrod integration of f over [a, b]; b may be infinite.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double tolerance, int max_depth = 15);

} // namespace casimirt::quadrature
