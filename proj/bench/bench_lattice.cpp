#include "casimirt/lattice.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

// Times the OpenMP lattice kernel against the serial reference on a few
// representative reduced temperatures. Both paths combine per-row partial
// sums in a fixed order, so the results must agree bit for bit; the
// benchmark aborts if they ever differ.

namespace {

using casimirt::lattice::Execution;
using clock_type = std::chrono::steady_clock;

double time_once(double z, double tolerance, Execution exec, double* value) {
  const auto start = clock_type::now();
  const auto out = casimirt::lattice::reduced_thermo(z, tolerance, exec);
  const auto stop = clock_type::now();
  *value = out.reduced.f_hat;
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

double best_of(int reps, double z, double tolerance, Execution exec,
               double* value) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t = time_once(z, tolerance, exec, value);
    if (t < best) best = t;
  }
  return best;
}

} // namespace

int main(int argc, char** argv) {
  const double tolerance = argc > 1 ? std::atof(argv[1]) : 1e-13;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

  std::printf("lattice reduced_thermo, tolerance %.3g, best of %d, %d threads\n",
              tolerance, reps, omp_get_max_threads());
  std::printf("%8s  %12s  %12s  %8s  %s\n", "z", "serial_ms", "parallel_ms",
              "speedup", "identical");

  const double zs[] = {0.25, 1.0, 4.0, 10.0, 25.0};
  for (const double z : zs) {
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double ts =
        best_of(reps, z, tolerance, Execution::serial, &serial_value);
    const double tp =
        best_of(reps, z, tolerance, Execution::parallel, &parallel_value);
    const bool same = serial_value == parallel_value;
    std::printf("%8.3g  %12.3f  %12.3f  %8.2f  %s\n", z, ts, tp, ts / tp,
                same ? "yes" : "NO");
    if (!same) {
      std::fprintf(stderr,
                   "serial and parallel kernels disagree at z = %g\n", z);
      return 1;
    }
  }
  return 0;
}
