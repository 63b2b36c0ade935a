#include "casimirt/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace casimirt::quadrature {

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double tolerance, int max_depth) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          f, a, b, static_cast<unsigned>(max_depth), tolerance, &error);
  return {value, error};
}

} // namespace casimirt::quadrature
