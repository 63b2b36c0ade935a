#include "doctest.h"

#include "casimirt/lattice.hpp"
#include "casimirt/matsubara.hpp"

#include <omp.h>

using namespace casimirt;
using lattice::Execution;

// The parallel kernels reduce into per-thread compensated accumulators that
// are combined in index order, so they must reproduce the serial results
// bit for bit at any thread count.

TEST_CASE("quadrant sums are identical in both execution modes") {
  const auto serial = lattice::detail::quadrant_sums(0.7, 300, 420,
                                                     Execution::serial);
  const auto parallel = lattice::detail::quadrant_sums(0.7, 300, 420,
                                                       Execution::parallel);
  CHECK(serial.q_a == parallel.q_a);
  CHECK(serial.q_f == parallel.q_f);
  CHECK(serial.q_e == parallel.q_e);
  CHECK(serial.remainder_bound == parallel.remainder_bound);
  CHECK(serial.terms == parallel.terms);
}

TEST_CASE("reduced thermodynamics are identical in both execution modes") {
  for (const double z : {0.3, 1.0, 5.0}) {
    const auto s = lattice::reduced_thermo(z, 1e-12, Execution::serial);
    const auto p = lattice::reduced_thermo(z, 1e-12, Execution::parallel);
    CHECK(s.reduced.a_hat == p.reduced.a_hat);
    CHECK(s.reduced.f_hat == p.reduced.f_hat);
    CHECK(s.reduced.e_hat == p.reduced.e_hat);
    CHECK(s.reduced.s_hat == p.reduced.s_hat);
    CHECK(s.bound_a == p.bound_a);
    CHECK(s.terms_used == p.terms_used);
  }
}

TEST_CASE("Delta is identical in both execution modes") {
  const auto s = lattice::delta_of_z(0.8, 1e-12, Execution::serial);
  const auto p = lattice::delta_of_z(0.8, 1e-12, Execution::parallel);
  CHECK(s.value == p.value);
  CHECK(s.tail_bound == p.tail_bound);
}

TEST_CASE("Matsubara force is identical in both execution modes") {
  for (const double z : {0.5, 2.0}) {
    const auto s = matsubara::force_matsubara_reduced(z, 1e-12,
                                                      Execution::serial);
    const auto p = matsubara::force_matsubara_reduced(z, 1e-12,
                                                      Execution::parallel);
    CHECK(s.value == p.value);
    CHECK(s.tail_bound == p.tail_bound);
    CHECK(s.terms_used == p.terms_used);
  }
}

TEST_CASE("parallel results do not depend on the thread count") {
  const int max_threads = omp_get_max_threads();
  const auto baseline = lattice::reduced_thermo(1.3, 1e-12,
                                                Execution::parallel);
  for (const int threads : {1, 2, 3, 7}) {
    omp_set_num_threads(threads);
    const auto run = lattice::reduced_thermo(1.3, 1e-12,
                                             Execution::parallel);
    CHECK(run.reduced.a_hat == baseline.reduced.a_hat);
    CHECK(run.reduced.f_hat == baseline.reduced.f_hat);
    CHECK(run.reduced.s_hat == baseline.reduced.s_hat);

    const auto force = matsubara::force_matsubara_reduced(
        1.3, 1e-12, Execution::parallel);
    const auto force_serial = matsubara::force_matsubara_reduced(
        1.3, 1e-12, Execution::serial);
    CHECK(force.value == force_serial.value);
  }
  omp_set_num_threads(max_threads);
}
