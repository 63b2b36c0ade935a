#pragma once

#include <cmath>
#include <cstdint>

namespace casimirt {

enum class Method { lattice, expansion_highT, expansion_lowT, oracle };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::lattice: return "lattice";
    case Method::expansion_highT: return "expansion_highT";
    case Method::expansion_lowT: return "expansion_lowT";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

// A summation result together with a bound on the discarded tail.
// For lattice-method results tail_bound is a rigorous envelope: the exact
// value lies in [value - tail_bound, value + tail_bound].
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  std::int64_t terms_used = 0;
  Method method = Method::lattice;
};

// Neumaier variant of compensated summation. Unlike plain Kahan it stays
// accurate when an addend exceeds the running sum in magnitude.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double result() const { return sum + comp; }
};

} // namespace casimirt
